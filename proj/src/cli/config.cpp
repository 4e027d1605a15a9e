#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "hua/cli.hpp"
#include "hua/errors.hpp"

namespace hua::cli {
namespace {

std::string trim(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(Errc::invalid_argument, "cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Complex complex_from_json(const Json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  if (v.is_object() && v.contains("re")) {
    return {v.at("re").get<double>(), v.value("im", 0.0)};
  }
  throw Error(Errc::invalid_argument, "'" + key + "' is not a complex number");
}

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

Complex parse_complex(std::string_view input) {
  const std::string text = trim(input);
  if (text.empty()) throw Error(Errc::invalid_argument, "empty complex number");
  if (const auto comma = text.find(','); comma != std::string::npos) {
    return {parse_double(text.substr(0, comma), "real part"), parse_double(text.substr(comma + 1), "imaginary part")};
  }
  const char last = text.back();
  if (last != 'i' && last != 'j') return parse_double(text, "number");

  const std::string body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_double(re, "real part"), parse_double(im, "imaginary part")};
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split_commas(text)) out.push_back(parse_double(trim(part), "list entry"));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split_commas(text)) {
    const std::string s = trim(part);
    int value = 0;
    const char* first = s.data();
    if (!s.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(Errc::invalid_argument, "cannot parse integer '" + s + "'");
    }
    out.push_back(value);
  }
  return out;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw Error(Errc::invalid_argument, "output format must be json, csv or text");
}

Config::Config(Json raw) : raw_(std::move(raw)), effective_(Json::object()) {
  if (!raw_.is_object()) throw Error(Errc::invalid_argument, "experiment config must be an object");
  if (raw_.contains("command")) effective_["command"] = raw_["command"];
}

bool Config::has(const std::string& key) const { return raw_.contains(key) && !raw_[key].is_null(); }

std::string Config::command() const {
  if (!has("command") || !raw_["command"].is_string()) {
    throw Error(Errc::invalid_argument, "experiment config needs a string 'command'");
  }
  return raw_["command"].get<std::string>();
}

const Json& Config::require(const std::string& key) const {
  if (!has(key)) throw Error(Errc::invalid_argument, "missing required parameter '" + key + "'");
  return raw_[key];
}

double Config::real(const std::string& key) {
  const Json& v = require(key);
  double value = 0.0;
  if (v.is_number()) {
    value = v.get<double>();
  } else if (v.is_string()) {
    value = parse_double(trim(v.get<std::string>()), key);
  } else {
    throw Error(Errc::invalid_argument, "'" + key + "' must be a real number");
  }
  effective_[key] = value;
  return value;
}

double Config::real(const std::string& key, double fallback) {
  if (has(key)) return real(key);
  effective_[key] = fallback;
  return fallback;
}

int Config::integer(const std::string& key) {
  const Json& v = require(key);
  int value = 0;
  if (v.is_number_integer()) {
    value = v.get<int>();
  } else if (v.is_string()) {
    const auto list = parse_int_list(v.get<std::string>());
    if (list.size() != 1) throw Error(Errc::invalid_argument, "'" + key + "' must be one integer");
    value = list.front();
  } else {
    throw Error(Errc::invalid_argument, "'" + key + "' must be an integer");
  }
  effective_[key] = value;
  return value;
}

int Config::integer(const std::string& key, int fallback) {
  if (has(key)) return integer(key);
  effective_[key] = fallback;
  return fallback;
}

std::int64_t Config::int64(const std::string& key, std::int64_t fallback) {
  std::int64_t value = fallback;
  if (has(key)) {
    const Json& v = raw_[key];
    if (v.is_number_integer()) {
      value = v.get<std::int64_t>();
    } else if (v.is_number() && v.get<double>() == std::floor(v.get<double>())) {
      value = static_cast<std::int64_t>(v.get<double>());
    } else if (v.is_string()) {
      // Accept "2e6" as well as "2000000".
      const double d = parse_double(trim(v.get<std::string>()), key);
      if (d != std::floor(d) || std::abs(d) > 9e18) {
        throw Error(Errc::invalid_argument, "'" + key + "' must be an integer");
      }
      value = static_cast<std::int64_t>(d);
    } else {
      throw Error(Errc::invalid_argument, "'" + key + "' must be an integer");
    }
  }
  effective_[key] = value;
  return value;
}

std::uint64_t Config::u64(const std::string& key, std::uint64_t fallback) {
  std::uint64_t value = fallback;
  if (has(key)) {
    const Json& v = raw_[key];
    if (v.is_number_unsigned()) {
      value = v.get<std::uint64_t>();
    } else if (v.is_string()) {
      const std::string s = trim(v.get<std::string>());
      std::size_t used = 0;
      try {
        value = std::stoull(s, &used, 0);
      } catch (const std::exception&) {
        used = 0;
      }
      if (s.empty() || s.front() == '-' || used != s.size()) {
        throw Error(Errc::invalid_argument, "'" + key + "' must be an unsigned 64-bit integer");
      }
    } else {
      throw Error(Errc::invalid_argument, "'" + key + "' must be an unsigned 64-bit integer");
    }
  }
  effective_[key] = value;
  return value;
}

Complex Config::complex(const std::string& key) {
  const Complex value = complex_from_json(require(key), key);
  effective_[key] = complex_to_json(value);
  return value;
}

Complex Config::complex(const std::string& key, Complex fallback) {
  if (has(key)) return complex(key);
  effective_[key] = complex_to_json(fallback);
  return fallback;
}

std::vector<double> Config::reals(const std::string& key) {
  const Json& v = require(key);
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_number()) throw Error(Errc::invalid_argument, "'" + key + "' must hold numbers");
      out.push_back(e.get<double>());
    }
  } else if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_string()) {
    out = parse_real_list(v.get<std::string>());
  } else {
    throw Error(Errc::invalid_argument, "'" + key + "' must be a list of reals");
  }
  effective_[key] = out;
  return out;
}

std::vector<int> Config::integers(const std::string& key) {
  const Json& v = require(key);
  std::vector<int> out;
  if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_number_integer()) throw Error(Errc::invalid_argument, "'" + key + "' must hold integers");
      out.push_back(e.get<int>());
    }
  } else if (v.is_number_integer()) {
    out.push_back(v.get<int>());
  } else if (v.is_string()) {
    out = parse_int_list(v.get<std::string>());
  } else {
    throw Error(Errc::invalid_argument, "'" + key + "' must be a list of integers");
  }
  effective_[key] = out;
  return out;
}

std::string Config::string(const std::string& key, const std::string& fallback) {
  std::string value = fallback;
  if (has(key)) {
    if (!raw_[key].is_string()) throw Error(Errc::invalid_argument, "'" + key + "' must be a string");
    value = raw_[key].get<std::string>();
  }
  effective_[key] = value;
  return value;
}

void Config::reject_unknown() const {
  static const char* const shared[] = {"seed", "samples", "kmax", "tol", "h", "workers"};
  for (const auto& [key, value] : raw_.items()) {
    if (effective_.contains(key)) continue;
    bool is_shared = false;
    for (const char* s : shared) is_shared = is_shared || key == s;
    if (!is_shared) throw Error(Errc::invalid_argument, "unknown parameter '" + key + "'");
  }
}

}  // namespace hua::cli
