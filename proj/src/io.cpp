#include "goodsemi/io.hpp"

#include <fstream>
#include <sstream>

#include "goodsemi/errors.hpp"
#include "json.hpp"

namespace goodsemi {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Position of a key for diagnostics about its value.
[[noreturn]] void fail_at_key(std::string_view text, const std::string& key, const std::string& what) {
  const std::size_t at = text.find("\"" + key + "\"");
  const auto [line, col] = line_column(text, at == std::string_view::npos ? 0 : at);
  throw ParseError(what, line, col);
}

Point point_from(std::string_view text, const std::string& key, const json& j, std::size_t s) {
  if (!j.is_array()) fail_at_key(text, key, "'" + key + "' must be an array of integers");
  std::vector<int> v;
  for (const json& x : j) {
    if (!x.is_number_integer()) fail_at_key(text, key, "'" + key + "' must contain integers only");
    const auto n = x.get<long long>();
    if (n < -(1 << 24) || n > (1 << 24)) fail_at_key(text, key, "coordinate out of range in '" + key + "'");
    v.push_back(static_cast<int>(n));
  }
  if (v.size() != s) fail_at_key(text, key, "'" + key + "' must have " + std::to_string(s) + " coordinates");
  return Point(std::move(v));
}

}  // namespace

IdealFrame read_ideal(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, offset);
    std::string msg = e.what();
    if (const auto colon = msg.rfind(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError("invalid JSON: " + msg, line, col);
  }
  if (!doc.is_object()) throw ParseError("ideal file must hold a JSON object", 1, 1);
  for (const auto& [key, _] : doc.items())
    if (key != "s" && key != "mu" && key != "gamma" && key != "frame" && key != "name")
      fail_at_key(text, key, "unknown key '" + key + "'");
  for (const char* key : {"s", "mu", "gamma", "frame"})
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'", 1, 1);
  if (!doc["s"].is_number_integer() || doc["s"].get<long long>() < 1 || doc["s"].get<long long>() > 16)
    fail_at_key(text, "s", "'s' must be an integer between 1 and 16");
  const auto s = static_cast<std::size_t>(doc["s"].get<long long>());
  const Point mu = point_from(text, "mu", doc["mu"], s);
  const Point gamma = point_from(text, "gamma", doc["gamma"], s);
  if (!doc["frame"].is_array()) fail_at_key(text, "frame", "'frame' must be an array of points");
  std::vector<Point> pts;
  for (const json& p : doc["frame"]) pts.push_back(point_from(text, "frame", p, s));
  try {
    return IdealFrame::from_points(mu, gamma, pts);
  } catch (const PreconditionError& e) {
    fail_at_key(text, "frame", e.what());
  }
}

IdealFrame load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_ideal(ss.str());
}

std::string write_point(const Point& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::string write_ideal(const IdealFrame& E) {
  std::string out = "{\n";
  out += "  \"s\": " + std::to_string(E.dim()) + ",\n";
  out += "  \"mu\": " + write_point(E.mu()) + ",\n";
  out += "  \"gamma\": " + write_point(E.gamma()) + ",\n";
  out += "  \"frame\": [";
  bool first = true;
  for (const Point& p : E.frame()) {
    out += first ? "" : ",";
    out += write_point(p);
    first = false;
  }
  return out + "]\n}\n";
}

void save_ideal(const IdealFrame& E, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << write_ideal(E);
}

Point parse_point(std::string_view text) {
  std::string t(text);
  auto fail = [&](std::size_t at) -> Point { throw ParseError("malformed point '" + t + "'", 1, static_cast<int>(at) + 1); };
  std::size_t k = 0;
  auto skip = [&] {
    while (k < t.size() && std::isspace(static_cast<unsigned char>(t[k]))) ++k;
  };
  skip();
  char close = '\0';
  if (k < t.size() && (t[k] == '[' || t[k] == '(')) {
    close = t[k] == '[' ? ']' : ')';
    ++k;
  }
  std::vector<int> v;
  for (;;) {
    skip();
    const std::size_t start = k;
    if (k < t.size() && (t[k] == '-' || t[k] == '+')) ++k;
    const std::size_t digits = k;
    while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
    if (k == digits || k - digits > 8) return fail(start);
    v.push_back(std::stoi(t.substr(start, k - start)));
    skip();
    if (k < t.size() && t[k] == ',') {
      ++k;
      continue;
    }
    break;
  }
  if (close) {
    if (k >= t.size() || t[k] != close) return fail(k);
    ++k;
  }
  skip();
  if (k != t.size()) return fail(k);
  return Point(std::move(v));
}

}  // namespace goodsemi
