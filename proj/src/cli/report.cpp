#include <iomanip>
#include <sstream>

#include "hua/cli.hpp"

namespace hua::cli {
namespace {

// Headline value of a report side: exact value or MC mean.
const Json* side_value(const Json& report, const char* side) {
  if (!report.contains(side) || !report[side].is_object()) return nullptr;
  const Json& s = report[side];
  if (s.contains("mean")) return &s["mean"];
  if (s.contains("value") && s["value"].is_object()) return &s["value"];
  return nullptr;
}

std::string number(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(17) << v.get<double>();
    return os.str();
  }
  return v.dump();
}

std::string complex_text(const Json* v) {
  if (v == nullptr) return "-";
  std::ostringstream os;
  os << std::setprecision(12) << (*v)["re"].get<double>();
  const double im = (*v)["im"].get<double>();
  os << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  return os.str();
}

void csv_row(std::ostringstream& os, const Json& r) {
  const Json* lhs = side_value(r, "lhs");
  const Json* rhs = side_value(r, "rhs");
  auto get = [&](const char* key) { return r.contains(key) ? number(r[key]) : std::string(); };
  os << r.value("command", "") << ',' << r.value("status", "") << ',' << (r.value("pass", false) ? "true" : "false")
     << ',' << (lhs ? number((*lhs)["re"]) : "") << ',' << (lhs ? number((*lhs)["im"]) : "") << ','
     << (rhs ? number((*rhs)["re"]) : "") << ',' << (rhs ? number((*rhs)["im"]) : "") << ',' << get("abs_diff")
     << ',' << get("rel_diff") << ',' << get("z_score") << ',' << get("wall_time_s") << '\n';
}

void text_block(std::ostringstream& os, const Json& r) {
  os << r.value("command", "") << ": " << r.value("status", "") << '\n';
  if (r.contains("error")) {
    os << "  error: " << r["error"].get<std::string>() << '\n';
    return;
  }
  if (side_value(r, "lhs")) {
    os << "  lhs: " << complex_text(side_value(r, "lhs"));
    if (r["lhs"].contains("stderr")) os << " (stderr " << number(r["lhs"]["stderr"]) << ")";
    os << '\n';
  }
  if (side_value(r, "rhs")) os << "  rhs: " << complex_text(side_value(r, "rhs")) << '\n';
  for (const char* key : {"abs_diff", "rel_diff", "z_score", "wall_time_s"}) {
    if (r.contains(key) && !r[key].is_null()) os << "  " << key << ": " << number(r[key]) << '\n';
  }
  if (r.contains("diagnostics") && r["diagnostics"].contains("richardson_ratio")) {
    os << "  richardson_ratio: " << r["diagnostics"]["richardson_ratio"].dump() << '\n';
  }
  if (r.contains("lhs") && !side_value(r, "lhs") && r["lhs"].is_object() && !r["lhs"].contains("max_relative")) {
    os << "  result: " << r["lhs"].dump() << '\n';
  }
}

}  // namespace

std::string version() { return HUA_VERSION; }

std::string render(const Json& report, OutputFormat format) {
  std::ostringstream os;
  const bool suite = report.contains("results");
  switch (format) {
    case OutputFormat::json:
      os << report.dump(2) << '\n';
      break;
    case OutputFormat::csv:
      os << "command,status,pass,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff,rel_diff,z_score,wall_time_s\n";
      if (suite) {
        for (const auto& r : report["results"]) csv_row(os, r);
      } else {
        csv_row(os, report);
      }
      break;
    case OutputFormat::text:
      if (suite) {
        for (const auto& r : report["results"]) text_block(os, r);
        os << "suite: " << report["counts"].dump() << '\n';
      } else {
        text_block(os, report);
      }
      break;
  }
  return os.str();
}

}  // namespace hua::cli
