#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "liftexp/abc.hpp"
#include "liftexp/identity.hpp"
#include "liftexp/integer.hpp"
#include "liftexp/pythagoras.hpp"
#include "liftexp/wieferich.hpp"

namespace liftexp {

enum class OutputFormat { json_lines, csv, human };

// accepts "json-lines", "csv", "human"
OutputFormat parse_format(const std::string& name);

// JSON number when the value fits a machine word, decimal string otherwise
nlohmann::ordered_json json_int(const Integer& x);

// Streaming serializer. json-lines prints one object per line with stable
// key order; csv prints a header whenever the column set changes, then one
// row per object; human prints key=value pairs and is not meant for parsing.
class Emitter {
 public:
  using Fields = std::vector<std::pair<std::string, nlohmann::ordered_json>>;

  Emitter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  void object(const Fields& fields);

  void record(const WieferichRecord& r);
  void survey(const SurveyReport& r);
  void spectrum(const SpectrumReport& r);
  void defect(const DefectReport& r);
  void verdict(const Integer& x, const Integer& y, const Integer& z, const CriterionVerdict& v);
  void split(const FactorSplit& s);
  void avg_power(const AvgPowerReport& r);

  OutputFormat format() const { return format_; }

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::string csv_columns_;
};

} // namespace liftexp
