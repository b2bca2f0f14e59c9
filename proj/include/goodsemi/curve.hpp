#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goodsemi/ideal.hpp"
#include "goodsemi/module_basis.hpp"
#include "goodsemi/series.hpp"

namespace goodsemi {

/// A ring R = Q[[g_1, ..., g_m]] inside Q[[t_1]] x ... x Q[[t_s]] together
/// with named R-modules given by generators. Text form, one directive per
/// line, '#' starts a comment:
///
///     branches 2
///     truncation 14                      (optional)
///     ring (-t^4, t) ; (-t^3, 0) ; (0, t) ; (t^5, 0)
///     module E (t^3, t) ; (t^2, 0)
///     canonical K                        (optional, names a module)
///
/// The module "R" (generated by 1) is always defined.
struct CurveSpec {
  std::size_t branches = 0;
  std::optional<int> truncation;
  std::vector<SeriesVector> ring;
  std::vector<std::pair<std::string, std::vector<SeriesVector>>> modules;
  std::optional<std::string> canonical;

  bool has_module(const std::string& name) const;
  /// Generators of the named module; throws PreconditionError if unknown.
  std::vector<SeriesVector> module(const std::string& name) const;
  /// Module names in file order, "R" first.
  std::vector<std::string> module_names() const;
};

CurveSpec parse_curve_spec(std::string_view text);
CurveSpec load_curve_spec(const std::string& path);
/// Canonical text; parse_curve_spec(format_curve_spec(c)) reproduces c and
/// formatting is idempotent.
std::string format_curve_spec(const CurveSpec& spec);

/// A curve spec evaluated at one truncation order N.
class CurveModel {
 public:
  CurveModel(CurveSpec spec, int N);

  const CurveSpec& spec() const { return spec_; }
  int truncation() const { return N_; }
  std::size_t dim() const { return spec_.branches; }

  /// <gens>_R modulo t^N.
  ModuleBasis span(const std::vector<SeriesVector>& gens) const;
  ModuleBasis module(const std::string& name) const { return span(spec_.module(name)); }
  /// The product module <g h>_R of two generator lists.
  ModuleBasis product(const std::vector<SeriesVector>& a, const std::vector<SeriesVector>& b) const;
  /// Q[[t_1]] x ... x Q[[t_s]] as an R-module, generated by all t^k e_i with
  /// k < N.
  ModuleBasis full_space() const;
  /// t^gamma (Q[[t_1]] x ... x Q[[t_s]]).
  ModuleBasis monomial_slice(const Point& gamma) const;

 private:
  CurveSpec spec_;
  int N_;
};

/// Pole bound for K : E read off the value sets: the colon has minimum at
/// least mu^K - mu^E, one extra step is added as a margin.
Point default_pole_bound(const IdealFrame& K, const IdealFrame& E);

/// Conductor ideal C_E = t^gamma (full space) with gamma = gamma^{Gamma_E}.
/// Cross-checks the slice against E : full_space(); throws Error on mismatch.
std::pair<ModuleBasis, Point> conductor_of(const ModuleBasis& E, const CurveModel& model);

/// Value set of a module that depends on the truncation, certified stable:
/// computed at N and at N + 2 with identical frames. N starts at the spec's
/// truncation (or the default policy) and is raised while the computation
/// reports BoundExceeded or the two runs disagree.
struct StableValues {
  IdealFrame frame;
  int truncation;
};
using ModuleBuilder = std::function<ModuleBasis(const CurveModel&)>;
StableValues stable_values(const CurveSpec& spec, const ModuleBuilder& build, int max_truncation = 96);

/// Truncation the spec asks for, or 2 max(gamma^{Gamma_R}) + 4.
int default_truncation(const CurveSpec& spec, int max_truncation = 96);

}  // namespace goodsemi
