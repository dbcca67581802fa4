#include "padovan/report.hpp"

#include <cmath>

namespace padovan {

std::string csv_field(const std::string& raw, bool force_quote) {
  bool needs_quote = force_quote;
  for (char c : raw) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quote = true;
      break;
    }
  }
  if (!needs_quote) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) row += ',';
    row += fields[i];
  }
  row += '\n';
  return row;
}

Json json_double(double v) {
  if (std::isnan(v)) return Json("nan");
  if (std::isinf(v)) return Json(v > 0 ? "inf" : "-inf");
  return Json(v);
}

Json json_complex(const std::complex<double>& v) {
  Json j;
  j["re"] = json_double(v.real());
  j["im"] = json_double(v.imag());
  return j;
}

Json params_json(const Params& params) {
  Json j;
  j["alpha"] = params.alpha.to_string();
  j["beta"] = params.beta.to_string();
  j["gamma"] = params.gamma.to_string();
  j["p"] = params.p.to_string();
  j["q"] = params.q.to_string();
  return j;
}

std::string params_echo(const Params& params) {
  return "params: alpha=" + params.alpha.to_string() + " beta=" + params.beta.to_string() +
         " gamma=" + params.gamma.to_string() + " p=" + params.p.to_string() +
         " q=" + params.q.to_string();
}

Json document(const std::string& command, const Params& params, Json run, Json data,
              Json summary) {
  Json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["params"] = params_json(params);
  doc["run"] = std::move(run);
  doc["data"] = std::move(data);
  if (!summary.is_null()) doc["summary"] = std::move(summary);
  return doc;
}

}  // namespace padovan
