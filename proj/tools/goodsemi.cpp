// goodsemi: command-line front end for good semigroups, their ideals, and the
// value sets of modules over curve rings.
//
// Exit status: 0 success, 1 a mathematical verdict failed (axioms, canonicity,
// symmetry, mismatching cross-checks), 2 bad input or an insufficient bound.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "goodsemi/curve.hpp"
#include "goodsemi/duality.hpp"
#include "goodsemi/errors.hpp"
#include "goodsemi/io.hpp"
#include "goodsemi/metric.hpp"
#include "goodsemi/plot.hpp"

using namespace goodsemi;

namespace {

constexpr int kOk = 0;
constexpr int kVerdict = 1;
constexpr int kInput = 2;

struct Output {
  std::string path;

  // Writes the ideal to --out if given, else to stdout.
  void ideal(const IdealFrame& E) const {
    if (path.empty())
      std::cout << write_ideal(E);
    else
      save_ideal(E, path);
  }
};

GoodSemigroup load_semigroup(const std::string& path) { return GoodSemigroup::certify(load_ideal(path)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

// "E", or "E*F" for the module spanned by pairwise generator products.
ModuleBasis build_module(const CurveModel& m, const std::string& expr) {
  std::vector<SeriesVector> gens;
  std::size_t start = 0;
  bool first = true;
  while (start <= expr.size()) {
    std::size_t stop = expr.find('*', start);
    if (stop == std::string::npos) stop = expr.size();
    const std::vector<SeriesVector> g = m.spec().module(expr.substr(start, stop - start));
    gens = first ? g : product_generators(gens, g);
    first = false;
    start = stop + 1;
  }
  return m.span(gens);
}

void print_report(const ValidationReport& r) { std::cout << r.summary() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Good semigroups, their ideals and canonical duality"};
  app.require_subcommand(1);
  std::function<int()> action;
  Output out;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out.path, "Write the resulting ideal here"); };

  // validate
  std::string in_path, s_path, k_path, f_path, curve_path;
  bool as_semigroup = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check the good-ideal axioms of an ideal file");
  validate_cmd->add_option("ideal", in_path, "Ideal file")->required();
  validate_cmd->add_option("--semigroup,-S", s_path, "Also check E + S in E for this semigroup");
  validate_cmd->add_flag("--as-semigroup", as_semigroup, "Check the semigroup axioms instead");
  validate_cmd->callback([&] {
    action = [&] {
      const IdealFrame E = load_ideal(in_path);
      ValidationReport r;
      if (as_semigroup)
        r = validate_semigroup(E);
      else if (!s_path.empty())
        r = validate(E, load_semigroup(s_path));
      else
        r = validate_axioms(E);
      std::cout << "conductor: " << conductor(E) << "\n";
      print_report(r);
      std::cout << "good: " << (r.passes() ? "true" : "false") << "\n";
      return r.passes() ? kOk : kVerdict;
    };
  });

  // canonical
  auto* canonical_cmd = app.add_subcommand("canonical", "Normalized canonical ideal K0 of a semigroup");
  canonical_cmd->add_option("semigroup", s_path, "Semigroup file")->required();
  add_out(canonical_cmd);
  canonical_cmd->callback([&] {
    action = [&] {
      out.ideal(canonical_normalized(load_semigroup(s_path)).frame());
      return kOk;
    };
  });

  // dual
  bool twice = false;
  auto* dual_cmd = app.add_subcommand("dual", "K - E for the canonical ideal K (K0 unless given)");
  dual_cmd->add_option("ideal", in_path, "Ideal file")->required();
  dual_cmd->add_option("--semigroup,-S", s_path, "Semigroup file")->required();
  dual_cmd->add_option("--canonical,-K", k_path, "Canonical ideal file (default K0)");
  dual_cmd->add_flag("--twice", twice, "Also compute K - (K - E) and compare with E");
  add_out(dual_cmd);
  dual_cmd->callback([&] {
    action = [&] {
      const GoodSemigroup S = load_semigroup(s_path);
      const CanonicalIdeal K = k_path.empty() ? CanonicalIdeal::normalized(S)
                                              : CanonicalIdeal::certify(GoodIdeal::certify(load_ideal(k_path), S), S);
      const IdealFrame E = load_ideal(in_path);
      const ValidationReport r = validate(E, S);
      if (!r.passes()) std::cerr << "note: input not (E2)-certified; involution not guaranteed\n";
      const IdealFrame d = difference(K.frame(), E);
      if (!twice) {
        out.ideal(d);
        return kOk;
      }
      const IdealFrame dd = difference(K.frame(), d);
      out.ideal(dd);
      const bool same = dd == E;
      std::cerr << "K - (K - E) " << (same ? "equals E" : (is_subset(E, dd) ? "strictly contains E" : "differs from E"))
                << "\n";
      return same || !r.passes() ? kOk : kVerdict;
    };
  });

  // is-canonical
  auto* iscan_cmd = app.add_subcommand("is-canonical", "Is the ideal a translate of K0?");
  iscan_cmd->add_option("ideal", in_path, "Ideal file")->required();
  iscan_cmd->add_option("--semigroup,-S", s_path, "Semigroup file")->required();
  iscan_cmd->callback([&] {
    action = [&] {
      const GoodSemigroup S = load_semigroup(s_path);
      const CanonicityVerdict v = is_canonical(GoodIdeal::certify(load_ideal(in_path), S), S);
      std::cout << "canonical: " << (v.canonical ? "true" : "false") << "\n";
      if (v.canonical) std::cout << "shift: " << v.shift << "\n";
      return v.canonical ? kOk : kVerdict;
    };
  });

  // is-symmetric
  auto* sym_cmd = app.add_subcommand("is-symmetric", "Is the semigroup its own canonical ideal?");
  sym_cmd->add_option("semigroup", s_path, "Semigroup file")->required();
  sym_cmd->callback([&] {
    action = [&] {
      const bool sym = is_symmetric(load_semigroup(s_path));
      std::cout << "symmetric: " << (sym ? "true" : "false") << "\n";
      return sym ? kOk : kVerdict;
    };
  });

  // diff, sum
  auto* diff_cmd = app.add_subcommand("diff", "E - F = { a : a + F in E }");
  diff_cmd->add_option("E", in_path, "Ideal file")->required();
  diff_cmd->add_option("F", f_path, "Ideal file")->required();
  add_out(diff_cmd);
  diff_cmd->callback([&] {
    action = [&] {
      out.ideal(difference(load_ideal(in_path), load_ideal(f_path)));
      return kOk;
    };
  });
  auto* sum_cmd = app.add_subcommand("sum", "E + F, with an axiom report on stderr");
  sum_cmd->add_option("E", in_path, "Ideal file")->required();
  sum_cmd->add_option("F", f_path, "Ideal file")->required();
  add_out(sum_cmd);
  sum_cmd->callback([&] {
    action = [&] {
      const IdealFrame ef = sum(load_ideal(in_path), load_ideal(f_path));
      out.ideal(ef);
      std::cerr << validate_axioms(ef).summary() << "\n";
      return kOk;
    };
  });

  // distance, rel-distance
  std::string from_text, to_text;
  auto* dist_cmd = app.add_subcommand("distance", "d_E(alpha, beta) along saturated chains");
  dist_cmd->add_option("ideal", in_path, "Ideal file")->required();
  dist_cmd->add_option("--from", from_text, "Start point, e.g. [0,0]")->required();
  dist_cmd->add_option("--to", to_text, "End point")->required();
  dist_cmd->callback([&] {
    action = [&] {
      const IdealFrame E = load_ideal(in_path);
      const Point a = parse_point(from_text), b = parse_point(to_text);
      if (!validate_axioms(E).passes()) {
        const auto lengths = chain_lengths(E, a, b);
        if (lengths.size() != 1) {
          std::cout << "saturated chains have different lengths:";
          for (std::size_t n : lengths) std::cout << " " << n;
          std::cout << "\n";
          return kVerdict;
        }
      }
      std::cout << distance_between(E, a, b) << "\n";
      return kOk;
    };
  });
  auto* rel_cmd = app.add_subcommand("rel-distance", "d(F \\ E) for E contained in F");
  rel_cmd->add_option("E", in_path, "Smaller ideal file")->required();
  rel_cmd->add_option("F", f_path, "Larger ideal file")->required();
  rel_cmd->callback([&] {
    action = [&] {
      std::cout << relative_distance_checked(load_ideal(in_path), load_ideal(f_path)) << "\n";
      return kOk;
    };
  });

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Split a semigroup into local factors");
  dec_cmd->add_option("semigroup", s_path, "Semigroup file")->required();
  dec_cmd->callback([&] {
    action = [&] {
      const LocalDecomposition d = decompose(load_semigroup(s_path));
      std::cout << "factors: " << d.factors.size() << "\n";
      for (std::size_t k = 0; k < d.factors.size(); ++k) {
        std::cout << "block:";
        for (std::size_t b : d.blocks[k]) std::cout << " " << b;
        std::cout << "\n" << write_ideal(d.factors[k].frame());
      }
      return kOk;
    };
  });

  // curve commands
  std::string module_a, module_b;
  int truncation = 0;
  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("curve", curve_path, "Curve spec file")->required();
    sub->add_option("--truncation,-N", truncation, "Starting truncation order");
  };
  auto load_curve = [&] {
    CurveSpec spec = load_curve_spec(curve_path);
    if (truncation > 0) spec.truncation = truncation;
    return spec;
  };

  auto* gamma_cmd = app.add_subcommand("gamma-of", "Value set of a module (name or product A*B) of a curve");
  add_curve(gamma_cmd);
  gamma_cmd->add_option("module", module_a, "Module name")->required();
  add_out(gamma_cmd);
  gamma_cmd->callback([&] {
    action = [&] {
      const CurveSpec spec = load_curve();
      const StableValues v = stable_values(spec, [&](const CurveModel& m) { return build_module(m, module_a); });
      out.ideal(v.frame);
      std::cerr << "truncation " << v.truncation << " (stable at " << v.truncation + 2 << ")\n";
      return kOk;
    };
  });

  auto* cg_cmd = app.add_subcommand("curve-gamma", "Value sets of the ring and every module of a curve");
  add_curve(cg_cmd);
  cg_cmd->callback([&] {
    action = [&] {
      const CurveSpec spec = load_curve();
      int status = kOk;
      for (const std::string& name : spec.module_names()) {
        const StableValues v = stable_values(spec, [&](const CurveModel& m) { return m.module(name); });
        const ValidationReport r = validate_axioms(v.frame);
        std::cout << "module " << name << " (truncation " << v.truncation << ")\n" << write_ideal(v.frame);
        std::cout << "good: " << (r.passes() ? "true" : "false") << "\n";
        if (!r.passes()) status = kVerdict;
      }
      if (spec.canonical) {
        const StableValues R = stable_values(spec, [&](const CurveModel& m) { return m.module("R"); });
        const StableValues K = stable_values(spec, [&](const CurveModel& m) { return m.module(*spec.canonical); });
        const GoodSemigroup S = GoodSemigroup::certify(R.frame);
        const CanonicityVerdict c = is_canonical(GoodIdeal::certify(K.frame, S), S);
        std::cout << "canonical " << *spec.canonical << ": " << (c.canonical ? "true" : "false") << "\n";
        if (!c.canonical) status = kVerdict;
      }
      return status;
    };
  });

  auto* colon_cmd = app.add_subcommand("colon", "Value set of K : E, compared with Gamma_K - Gamma_E");
  add_curve(colon_cmd);
  colon_cmd->add_option("K", module_a, "Numerator module")->required();
  colon_cmd->add_option("E", module_b, "Denominator module")->required();
  add_out(colon_cmd);
  colon_cmd->callback([&] {
    action = [&] {
      const CurveSpec spec = load_curve();
      const StableValues v = stable_values(spec, [&](const CurveModel& m) {
        const ModuleBasis K = build_module(m, module_a), E = build_module(m, module_b);
        return colon(K, E, default_pole_bound(value_semigroup_ideal(K), value_semigroup_ideal(E)));
      });
      const IdealFrame GK = stable_values(spec, [&](const CurveModel& m) { return build_module(m, module_a); }).frame;
      const IdealFrame GE = stable_values(spec, [&](const CurveModel& m) { return build_module(m, module_b); }).frame;
      out.ideal(v.frame);
      const bool agree = v.frame == difference(GK, GE);
      std::cerr << "Gamma(K:E) " << (agree ? "equals" : "differs from") << " Gamma_K - Gamma_E\n";
      return agree ? kOk : kVerdict;
    };
  });

  auto* len_cmd = app.add_subcommand("length", "Length of F / E next to d(Gamma_F \\ Gamma_E)");
  add_curve(len_cmd);
  len_cmd->add_option("F", module_a, "Larger module")->required();
  len_cmd->add_option("E", module_b, "Smaller module")->required();
  len_cmd->callback([&] {
    action = [&] {
      const CurveSpec spec = load_curve();
      const StableValues GF = stable_values(spec, [&](const CurveModel& m) { return build_module(m, module_a); });
      const StableValues GE = stable_values(spec, [&](const CurveModel& m) { return build_module(m, module_b); });
      const CurveModel m(spec, std::max(GE.truncation, GF.truncation) + 2);
      const long long len = length_quotient(build_module(m, module_a), build_module(m, module_b));
      const long long d = relative_distance_checked(GE.frame, GF.frame);
      std::cout << "length: " << len << "\ndistance: " << d << "\n";
      return len == d ? kOk : kVerdict;
    };
  });

  // plot
  bool ascii = false;
  std::string svg_path, title, lo_text, hi_text;
  auto* plot_cmd = app.add_subcommand("plot", "Draw a two-dimensional ideal");
  plot_cmd->add_option("ideal", in_path, "Ideal file")->required();
  plot_cmd->add_flag("--ascii", ascii, "Print an ASCII grid (default when --svg is absent)");
  plot_cmd->add_option("--svg", svg_path, "Write an SVG picture here");
  plot_cmd->add_option("--title", title, "Caption");
  plot_cmd->add_option("--lo", lo_text, "Lower window corner (default min(0, mu))");
  plot_cmd->add_option("--hi", hi_text, "Upper window corner (default gamma + 2)");
  plot_cmd->callback([&] {
    action = [&] {
      const IdealFrame E = load_ideal(in_path);
      PlotSpec spec = default_plot(E, title);
      if (!lo_text.empty() || !hi_text.empty())
        spec.window = Box(lo_text.empty() ? spec.window.lo : parse_point(lo_text),
                          hi_text.empty() ? spec.window.hi : parse_point(hi_text));
      if (!svg_path.empty()) write_file(svg_path, svg_plot(E, spec));
      if (ascii || svg_path.empty()) std::cout << ascii_plot(E, spec);
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const NotGood& e) {
    std::cerr << "not good: " << e.what() << "\n";
    return kVerdict;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
