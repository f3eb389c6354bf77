#include "hdc/report.hpp"

#include <ostream>

namespace hdc {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

void write_csv(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << kCsvSchemaLine << '\n';
  out << "n,d,j,bound,kind,rigor,value_log2,value_exact,condition\n";
  for (const auto& row : rows) {
    const BoundValue& b = row.bound;
    out << row.n << ',' << row.d << ',' << row.j() << ',' << csv_field(b.label) << ',' << to_string(b.kind) << ','
        << to_string(b.rigor) << ',' << format_real(b.value_log2) << ','
        << (b.value_exact ? to_string(*b.value_exact) : std::string()) << ',' << csv_field(b.condition) << '\n';
  }
}

Json to_json(const BoundRow& row) {
  const BoundValue& b = row.bound;
  Json j;
  j["n"] = row.n;
  j["d"] = row.d;
  j["j"] = row.j();
  j["bound"] = b.label;
  j["kind"] = std::string(to_string(b.kind));
  j["rigor"] = std::string(to_string(b.rigor));
  j["value_log2"] = format_real(b.value_log2);
  j["value_exact"] = b.value_exact ? Json(to_string(*b.value_exact)) : Json(nullptr);
  j["condition"] = b.condition;
  return j;
}

Json to_json(const std::vector<BoundRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(to_json(row));
  return out;
}

Json to_json(const ConstructionSpec& spec) {
  Json j;
  j["m"] = spec.m;
  j["c"] = spec.c;
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["generator_hex"] = spec.generator.to_hex();
  j["designed_distance"] = spec.designed_distance;
  return j;
}

Json to_json(const BchCertificate& cert) {
  Json j;
  j["window_start"] = cert.window_start;
  j["designed_distance"] = cert.designed_distance;
  j["best_bound"] = cert.best_bound;
  j["best_run_start"] = cert.best_run_start;
  return j;
}

Json to_json(const DistanceReport& report) {
  Json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["d_min"] = report.d_min;
  j["designed_distance"] = report.designed_distance;
  j["meets_theorem1"] = report.meets_guarantee;
  j["seconds"] = report.seconds;
  return j;
}

Json to_json(const EigenCertificate& cert, bool asymptotic) {
  Json j;
  j["n"] = asymptotic ? Json("asymptotic") : Json(cert.n);
  j["r"] = cert.r;
  j["lambda_float"] = format_real(cert.lambda_float);
  j["lambda_certified_num"] = to_string(BigInt(numerator(cert.lambda_certified)));
  j["lambda_certified_den"] = to_string(BigInt(denominator(cert.lambda_certified)));
  return j;
}

Json to_json(const ReplayReport& report) {
  Json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["d"] = report.d;
  j["code_size"] = report.code_size;
  j["ball_size"] = report.ball_size;
  j["lambda"] = format_real(report.lambda);
  j["bound"] = format_real(report.bound);
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    Json step;
    step["name"] = s.name;
    step["relation"] = s.equality ? "==" : "<=";
    step["lhs"] = format_real(s.lhs);
    step["rhs"] = format_real(s.rhs);
    step["relative_slack"] = format_real(s.relative_slack());
    step["pass"] = s.pass;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["pass"] = report.pass();
  return j;
}

}  // namespace hdc
