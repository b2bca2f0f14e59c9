#include "goodsemi/curve.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "goodsemi/errors.hpp"

namespace goodsemi {

bool CurveSpec::has_module(const std::string& name) const {
  if (name == "R") return true;
  return std::any_of(modules.begin(), modules.end(), [&](const auto& m) { return m.first == name; });
}

std::vector<SeriesVector> CurveSpec::module(const std::string& name) const {
  if (name == "R") return {SeriesVector::one(branches)};
  for (const auto& [n, gens] : modules)
    if (n == name) return gens;
  throw PreconditionError("unknown module '" + name + "'");
}

std::vector<std::string> CurveSpec::module_names() const {
  std::vector<std::string> out{"R"};
  for (const auto& m : modules) out.push_back(m.first);
  return out;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; });
}

struct Cursor {
  std::string_view line;
  int number;
  std::size_t pos = 0;

  void skip() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  int column() const { return static_cast<int>(pos) + 1; }
  std::string word() {
    skip();
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) && line[pos] != '(') ++pos;
    return std::string(line.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& what, int col) const { throw ParseError(what, number, col); }
  int integer(const char* what) {
    skip();
    const int col = column();
    const std::string w = word();
    if (w.empty() || w.size() > 6 || !std::all_of(w.begin(), w.end(), ::isdigit))
      fail(std::string("expected ") + what, col);
    return std::stoi(w);
  }
  void end() {
    skip();
    if (pos < line.size()) fail("unexpected trailing input", column());
  }
  std::vector<SeriesVector> series_rest() {
    skip();
    const int col = column();
    auto out = parse_series_list(line.substr(pos), number, static_cast<int>(pos));
    if (out.empty()) fail("expected at least one vector", col);
    pos = line.size();
    return out;
  }
};

}  // namespace

CurveSpec parse_curve_spec(std::string_view text) {
  CurveSpec spec;
  std::optional<std::pair<std::string, std::pair<int, int>>> canonical_at;
  bool have_ring = false;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor cur{line, number};
    cur.skip();
    if (cur.pos >= line.size()) continue;
    const int key_col = cur.column();
    const std::string key = cur.word();

    auto check_dims = [&](const std::vector<SeriesVector>& vs, int col) {
      if (spec.branches == 0) cur.fail("'branches' must come first", key_col);
      for (const SeriesVector& v : vs)
        if (v.dim() != spec.branches)
          cur.fail("vector " + format(v) + " has " + std::to_string(v.dim()) + " branches, expected " +
                       std::to_string(spec.branches),
                   col);
    };

    if (key == "branches") {
      if (spec.branches) cur.fail("duplicate 'branches'", key_col);
      const int col = (cur.skip(), cur.column());
      const int n = cur.integer("a branch count");
      if (n < 1) cur.fail("branch count must be positive", col);
      spec.branches = static_cast<std::size_t>(n);
      cur.end();
    } else if (key == "truncation") {
      if (spec.truncation) cur.fail("duplicate 'truncation'", key_col);
      const int col = (cur.skip(), cur.column());
      const int n = cur.integer("a truncation order");
      if (n < 2) cur.fail("truncation must be at least 2", col);
      spec.truncation = n;
      cur.end();
    } else if (key == "ring") {
      if (have_ring) cur.fail("duplicate 'ring'", key_col);
      const int col = (cur.skip(), cur.column());
      spec.ring = cur.series_rest();
      check_dims(spec.ring, col);
      for (const SeriesVector& g : spec.ring)
        for (std::size_t i = 0; i < g.dim(); ++i)
          if (const auto o = g.order(i); o && *o < 1)
            cur.fail("ring generator " + format(g) + " needs positive order in every nonzero branch", col);
      have_ring = true;
    } else if (key == "module") {
      const int name_col = (cur.skip(), cur.column());
      const std::string name = cur.word();
      if (!valid_name(name)) cur.fail("expected a module name", name_col);
      if (spec.has_module(name)) cur.fail("module '" + name + "' is already defined", name_col);
      const int col = (cur.skip(), cur.column());
      auto gens = cur.series_rest();
      check_dims(gens, col);
      spec.modules.emplace_back(name, std::move(gens));
    } else if (key == "canonical") {
      if (canonical_at) cur.fail("duplicate 'canonical'", key_col);
      const int name_col = (cur.skip(), cur.column());
      const std::string name = cur.word();
      if (!valid_name(name)) cur.fail("expected a module name", name_col);
      canonical_at = {name, {number, name_col}};
      cur.end();
    } else {
      cur.fail("unknown directive '" + key + "'", key_col);
    }
  }
  if (spec.branches == 0) throw ParseError("missing 'branches'", number, 1);
  if (!have_ring) throw ParseError("missing 'ring'", number, 1);
  if (canonical_at) {
    const auto& [name, at] = *canonical_at;
    if (!spec.has_module(name)) throw ParseError("canonical names unknown module '" + name + "'", at.first, at.second);
    spec.canonical = name;
  }
  return spec;
}

CurveSpec load_curve_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_curve_spec(ss.str());
}

std::string format_curve_spec(const CurveSpec& spec) {
  std::ostringstream os;
  os << "branches " << spec.branches << "\n";
  if (spec.truncation) os << "truncation " << *spec.truncation << "\n";
  os << "ring " << format(spec.ring) << "\n";
  for (const auto& [name, gens] : spec.modules) os << "module " << name << " " << format(gens) << "\n";
  if (spec.canonical) os << "canonical " << *spec.canonical << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

CurveModel::CurveModel(CurveSpec spec, int N) : spec_(std::move(spec)), N_(N) {
  if (N < 2) throw PreconditionError("truncation must be at least 2");
}

ModuleBasis CurveModel::span(const std::vector<SeriesVector>& gens) const {
  return goodsemi::span(spec_.ring, gens, N_);
}

ModuleBasis CurveModel::product(const std::vector<SeriesVector>& a, const std::vector<SeriesVector>& b) const {
  return span(product_generators(a, b));
}

ModuleBasis CurveModel::full_space() const {
  const std::size_t s = dim();
  ModuleBasis out(Layout::uniform(s, 0, N_));
  std::vector<SeriesVector> gens;
  for (std::size_t i = 0; i < s; ++i)
    for (int k = 0; k < N_; ++k) gens.push_back(SeriesVector::monomial(s, i, k));
  for (const SeriesVector& g : gens) out.insert(g);
  out.set_generators(std::move(gens));
  return out;
}

ModuleBasis CurveModel::monomial_slice(const Point& gamma) const {
  const std::size_t s = dim();
  std::vector<int> lo(s);
  for (std::size_t i = 0; i < s; ++i) lo[i] = std::min(0, std::min(gamma[i], N_));
  ModuleBasis out(Layout(lo, std::vector<int>(s, N_)));
  std::vector<SeriesVector> gens;
  for (std::size_t i = 0; i < s; ++i)
    for (int k = gamma[i]; k < N_; ++k) gens.push_back(SeriesVector::monomial(s, i, k));
  for (const SeriesVector& g : gens) out.insert(g);
  out.set_generators(std::move(gens));
  return out;
}

Point default_pole_bound(const IdealFrame& K, const IdealFrame& E) {
  Point p(K.dim(), 0);
  for (std::size_t i = 0; i < K.dim(); ++i) p[i] = std::max(0, E.mu()[i] - K.mu()[i]) + 1;
  return p;
}

std::pair<ModuleBasis, Point> conductor_of(const ModuleBasis& E, const CurveModel& model) {
  const Point gamma = conductor(value_semigroup_ideal(E));
  ModuleBasis slice = model.monomial_slice(gamma);
  Point pole(E.dim(), 0);
  for (std::size_t i = 0; i < E.dim(); ++i) pole[i] = std::max(0, -E.layout().lo[i]) + 1;
  const ModuleBasis check = colon(E, model.full_space(), pole);
  if (!is_submodule(check, slice) || !is_submodule(slice, check))
    throw Error("conductor slice t^" + gamma.to_string() + " disagrees with E : full space");
  return {std::move(slice), gamma};
}

int default_truncation(const CurveSpec& spec, int max_truncation) {
  if (spec.truncation) return *spec.truncation;
  for (int N = 8; N <= max_truncation; N *= 2) {
    try {
      const IdealFrame S = value_semigroup_ideal(CurveModel(spec, N).module("R"));
      int m = 0;
      for (std::size_t i = 0; i < S.dim(); ++i) m = std::max(m, S.gamma()[i]);
      return std::max(2 * m + 4, 6);
    } catch (const BoundExceeded&) {
    }
  }
  throw BoundExceeded("no conductor of R found up to truncation " + std::to_string(max_truncation));
}

StableValues stable_values(const CurveSpec& spec, const ModuleBuilder& build, int max_truncation) {
  std::string last = "no attempt";
  for (int N = default_truncation(spec, max_truncation); N + 2 <= max_truncation; N += 2) {
    try {
      const IdealFrame a = value_semigroup_ideal(build(CurveModel(spec, N)));
      const IdealFrame b = value_semigroup_ideal(build(CurveModel(spec, N + 2)));
      if (a == b) return {a, N};
      last = "values differ between truncation " + std::to_string(N) + " and " + std::to_string(N + 2);
    } catch (const BoundExceeded& e) {
      last = e.what();
    }
  }
  throw BoundExceeded("value set not stable up to truncation " + std::to_string(max_truncation) + ": " + last);
}

}  // namespace goodsemi
