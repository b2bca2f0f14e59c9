#include "goodsemi/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "goodsemi/errors.hpp"

namespace goodsemi {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

void record(ValidationReport& report, Witness w) {
  ++report.failure_count;
  std::size_t same = 0;
  for (const Witness& existing : report.witnesses)
    if (existing.axiom == w.axiom) ++same;
  if (same < kMaxWitnesses) report.witnesses.push_back(std::move(w));
}

BranchSet complement(std::size_t s, unsigned mask) {
  BranchSet out;
  for (std::size_t i = 0; i < s; ++i)
    if (!(mask & (1u << i))) out.push_back(i);
  return out;
}

void check_e1(const IdealFrame& E, ValidationReport& report) {
  const std::vector<Point> members = E.frame();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      Point m = cmin(members[a], members[b]);
      if (!E.contains(m)) {
        report.e1 = false;
        record(report, {Axiom::E1, members[a], members[b], std::nullopt});
      }
    }
  }
}

// For every m in [mu, gamma] let T(m) be the set of masks A such that some
// member agrees with m off A and exceeds m on A. Pairs (alpha, beta) with
// min(alpha, beta) = m correspond to disjoint A, B in T(m); the branches of
// equality are those outside A u B, and (E2) at branch j asks for some A' in
// T(m) containing j and avoiding A u B. Members above gamma behave like their
// capped image, so m never needs to leave the frame box.
void check_e2(const IdealFrame& E, ValidationReport& report) {
  const std::size_t s = E.dim();
  const unsigned full = (1u << s) - 1;
  const Box box = E.frame_box();
  std::vector<std::optional<Point>> rep(full + 1);
  for (std::size_t k = 0; k < box.size(); ++k) {
    const Point m = box.point_at(k);
    bool any = false;
    for (unsigned A = 0; A <= full; ++A) {
      rep[A] = find_in_delta(E, m, complement(s, A));
      any = any || rep[A].has_value();
    }
    if (!any) continue;
    for (unsigned A = 0; A <= full; ++A) {
      if (!rep[A]) continue;
      for (unsigned B = A; B <= full; ++B) {
        if (!rep[B] || (A & B)) continue;
        const unsigned used = A | B;
        for (std::size_t j = 0; j < s; ++j) {
          if (used & (1u << j)) continue;
          bool found = false;
          for (unsigned Ap = 0; Ap <= full && !found; ++Ap) {
            found = rep[Ap] && (Ap & (1u << j)) && !(Ap & used);
          }
          if (!found) {
            report.e2 = false;
            record(report, {Axiom::E2, *rep[A], *rep[B], j});
          }
        }
      }
    }
  }
}

void check_closure(const IdealFrame& E, const IdealFrame& S, ValidationReport& report) {
  const Point zero = Point::zero(E.dim());
  const Box sigma_box(zero, cmax(cmax(E.gamma() - E.mu(), S.gamma()), zero));
  const std::vector<Point> sigmas = members_in(S, sigma_box);
  for (const Point& e : E.frame()) {
    for (const Point& sigma : sigmas) {
      if (!E.contains(e + sigma)) {
        report.closure = false;
        record(report, {Axiom::Closure, e, sigma, std::nullopt});
      }
    }
  }
}

}  // namespace

IdealFrame::IdealFrame(Point mu, Point gamma, std::vector<std::uint8_t> bits)
    : mu_(std::move(mu)), gamma_(std::move(gamma)), bits_(std::move(bits)) {}

IdealFrame IdealFrame::from_points(const Point& mu, const Point& gamma, const std::vector<Point>& points) {
  require_same_dim(mu, gamma);
  const Box box(mu, gamma);
  std::vector<std::uint8_t> bits(box.size(), 0);
  for (const Point& p : points) {
    require_same_dim(mu, p);
    if (!box.contains(p)) {
      throw PreconditionError("frame point " + p.to_string() + " outside [" + mu.to_string() + ", " +
                              gamma.to_string() + "]");
    }
    bits[box.index(p)] = 1;
  }
  if (!bits[box.index(mu)]) throw PreconditionError("frame does not contain mu " + mu.to_string());
  if (!bits[box.index(gamma)]) throw PreconditionError("frame does not contain gamma " + gamma.to_string());
  IdealFrame out(mu, gamma, std::move(bits));
  out.normalize();
  return out;
}

IdealFrame IdealFrame::from_predicate(const Box& box, const std::function<bool(const Point&)>& member) {
  std::vector<Point> members;
  for (std::size_t k = 0; k < box.size(); ++k) {
    Point p = box.point_at(k);
    if (member(p)) members.push_back(std::move(p));
  }
  if (members.empty()) throw PreconditionError("set is empty on the scan box");
  Point mu = members.front();
  for (const Point& p : members) mu = cmin(mu, p);
  if (!member(mu)) throw PreconditionError("set has no minimum (min " + mu.to_string() + " is not a member)");
  if (!member(box.hi)) throw PreconditionError("capping bound " + box.hi.to_string() + " is not a member");
  return from_points(mu, box.hi, members);
}

IdealFrame IdealFrame::principal(const Point& alpha) { return IdealFrame(alpha, alpha, {1}); }

bool IdealFrame::contains(const Point& alpha) const {
  require_same_dim(alpha, mu_);
  if (!leq(mu_, alpha)) return false;
  return bit(cmin(alpha, gamma_));
}

std::vector<Point> IdealFrame::frame() const {
  const Box box = frame_box();
  std::vector<Point> out;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) out.push_back(box.point_at(k));
  return out;
}

std::size_t IdealFrame::frame_size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool IdealFrame::capping_valid(const Point& c) const {
  const Box box = frame_box();
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    const Point p = box.point_at(k);
    if ((bits_[k] != 0) != bit(cmin(p, c))) return false;
  }
  return true;
}

// The valid bounds form an up-set closed under min, so a single pass of
// coordinate descent reaches the least one.
void IdealFrame::normalize() {
  Point c = gamma_;
  for (std::size_t i = 0; i < dim(); ++i) {
    while (c[i] > mu_[i]) {
      Point lower = c;
      --lower[i];
      if (!capping_valid(lower)) break;
      c = std::move(lower);
    }
  }
  if (c == gamma_) return;
  const Box small(mu_, c);
  std::vector<std::uint8_t> bits(small.size());
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = bit(small.point_at(k)) ? 1 : 0;
  gamma_ = std::move(c);
  bits_ = std::move(bits);
}

std::vector<Point> members_in(const IdealFrame& E, const Box& box) {
  std::vector<Point> out;
  for (std::size_t k = 0; k < box.size(); ++k) {
    Point p = box.point_at(k);
    if (E.contains(p)) out.push_back(std::move(p));
  }
  return out;
}

bool is_subset(const IdealFrame& E, const IdealFrame& F) {
  require_same_dim(E.mu(), F.mu());
  const Box box(E.mu(), cmax(E.gamma(), F.gamma()));
  for (std::size_t k = 0; k < box.size(); ++k) {
    const Point p = box.point_at(k);
    if (E.contains(p) && !F.contains(p)) return false;
  }
  return true;
}

IdealFrame shift(const IdealFrame& E, const Point& alpha) {
  require_same_dim(E.mu(), alpha);
  std::vector<Point> points = E.frame();
  for (Point& p : points) p += alpha;
  return IdealFrame::from_points(E.mu() + alpha, E.gamma() + alpha, points);
}

std::optional<Point> find_in_delta(const IdealFrame& E, const Point& alpha, const BranchSet& J) {
  require_same_dim(E.mu(), alpha);
  const std::size_t s = E.dim();
  std::vector<bool> fixed(s, false);
  for (std::size_t j : J) {
    if (j >= s) throw DimensionMismatch("branch index out of range");
    fixed[j] = true;
  }
  Point lo(s), hi(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (fixed[i]) {
      if (alpha[i] < E.mu()[i]) return std::nullopt;
      lo[i] = hi[i] = alpha[i];
    } else {
      lo[i] = std::max(alpha[i] + 1, E.mu()[i]);
      hi[i] = std::max(alpha[i] + 1, E.gamma()[i]);
    }
  }
  const Box box(lo, hi);
  for (std::size_t k = 0; k < box.size(); ++k) {
    Point p = box.point_at(k);
    if (E.contains(p)) return p;
  }
  return std::nullopt;
}

bool delta_empty(const IdealFrame& E, const Point& alpha) {
  for (std::size_t i = 0; i < E.dim(); ++i)
    if (find_in_delta(E, alpha, {i})) return false;
  return true;
}

Point conductor(const IdealFrame& E) {
  const Box box = E.frame_box();
  std::vector<std::uint8_t> in_c(box.size(), 0);
  for (std::size_t k = box.size(); k-- > 0;) {
    const Point p = box.point_at(k);
    bool ok = E.contains(p);
    for (std::size_t i = 0; ok && i < E.dim(); ++i) {
      if (p[i] == E.gamma()[i]) continue;
      Point up = p;
      ++up[i];
      ok = in_c[box.index(up)] != 0;
    }
    in_c[k] = ok ? 1 : 0;
  }
  std::optional<Point> low;
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (!in_c[k]) continue;
    const Point p = box.point_at(k);
    low = low ? cmin(*low, p) : p;
  }
  if (!in_c[box.index(*low)]) {
    throw PreconditionError("conductor set of the frame has no minimum");
  }
  return *low;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Closure: return "closure";
    case Axiom::E0: return "E0";
    case Axiom::E1: return "E1";
    case Axiom::E2: return "E2";
  }
  return "?";
}

std::string Witness::describe() const {
  std::ostringstream os;
  os << to_string(axiom) << ": " << first << ", " << second;
  if (branch) os << ", j=" << *branch;
  return os.str();
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "closure: " << (closure ? "pass" : "FAIL") << "\n"
     << "E0: " << (e0 ? "pass" : "FAIL") << "\n"
     << "E1: " << (e1 ? "pass" : "FAIL") << "\n"
     << "E2: " << (e2 ? "pass" : "FAIL") << " (epsilon searched up to " << e2_search_cap << ")\n";
  for (const Witness& w : witnesses) os << "witness " << w.describe() << "\n";
  if (!representation_certified()) {
    os << "note: (E1)/(E2) not certified; the min-capping rule is taken as the definition of the set\n";
  }
  return os.str();
}

ValidationReport validate_axioms(const IdealFrame& E) {
  ValidationReport report;
  report.e2_search_cap = E.gamma() + Point::ones(E.dim());
  if (!E.contains(E.gamma())) {
    report.e0 = false;
    record(report, {Axiom::E0, E.gamma(), E.gamma(), std::nullopt});
  }
  check_e1(E, report);
  check_e2(E, report);
  return report;
}

ValidationReport validate(const IdealFrame& E, const GoodSemigroup& S) {
  require_same_dim(E.mu(), S.frame().mu());
  ValidationReport report = validate_axioms(E);
  check_closure(E, S.frame(), report);
  return report;
}

ValidationReport validate_semigroup(const IdealFrame& S) {
  ValidationReport report = validate_axioms(S);
  const Point zero = Point::zero(S.dim());
  if (S.mu() != zero) {
    report.closure = false;
    record(report, {Axiom::Closure, S.mu(), zero, std::nullopt});
    return report;
  }
  check_closure(S, S, report);
  return report;
}

GoodSemigroup GoodSemigroup::certify(const IdealFrame& frame) {
  const ValidationReport report = validate_semigroup(frame);
  if (!report.passes()) throw NotGood("not a good semigroup:\n" + report.summary());
  return GoodSemigroup(frame);
}

GoodSemigroup GoodSemigroup::natural(std::size_t s) { return GoodSemigroup(IdealFrame::principal(Point::zero(s))); }

GoodSemigroup GoodSemigroup::numerical(const std::vector<int>& generators) {
  int g = 0;
  for (int a : generators) {
    if (a <= 0) throw PreconditionError("numerical semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw PreconditionError("numerical semigroup generators must have gcd 1");
  const int smallest = *std::min_element(generators.begin(), generators.end());
  std::vector<std::uint8_t> in{1};
  int run = 0;
  int n = 0;
  while (run < smallest) {
    ++n;
    bool member = false;
    for (int a : generators) member = member || (n >= a && in[static_cast<std::size_t>(n - a)]);
    in.push_back(member ? 1 : 0);
    run = member ? run + 1 : 0;
  }
  const int c = n - smallest + 1;
  std::vector<Point> points;
  for (int k = 0; k <= c; ++k)
    if (in[static_cast<std::size_t>(k)]) points.push_back(Point{k});
  return certify(IdealFrame::from_points(Point{0}, Point{c}, points));
}

GoodIdeal GoodIdeal::certify(const IdealFrame& frame, const GoodSemigroup& S) {
  const ValidationReport report = validate(frame, S);
  if (!report.passes()) throw NotGood("not a good semigroup ideal:\n" + report.summary());
  return GoodIdeal(frame);
}

IdealFrame sum(const IdealFrame& E, const IdealFrame& F) {
  require_same_dim(E.mu(), F.mu());
  const Box box(E.mu() + F.mu(), E.gamma() + F.gamma());
  return IdealFrame::from_predicate(box, [&](const Point& alpha) {
    const Box parts(E.mu(), alpha - F.mu());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const Point e = parts.point_at(k);
      if (E.contains(e) && F.contains(alpha - e)) return true;
    }
    return false;
  });
}

bool is_local(const GoodSemigroup& S) {
  const Point zero = Point::zero(S.dim());
  for (const Point& p : members_in(S.frame(), Box(zero, S.gamma() + Point::ones(S.dim())))) {
    if (p.is_zero()) continue;
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (p[i] == 0) return false;
  }
  return true;
}

IdealFrame project(const IdealFrame& E, const BranchSet& block) {
  if (block.empty()) throw PreconditionError("empty projection block");
  const std::size_t m = block.size();
  Point lo(m), hi(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (block[k] >= E.dim()) throw DimensionMismatch("projection block out of range");
    lo[k] = E.mu()[block[k]];
    hi[k] = E.gamma()[block[k]];
  }
  const Box box(lo, hi);
  std::vector<std::uint8_t> hit(box.size(), 0);
  for (const Point& p : E.frame()) {
    Point q(m);
    for (std::size_t k = 0; k < m; ++k) q[k] = p[block[k]];
    hit[box.index(q)] = 1;
  }
  return IdealFrame::from_predicate(box, [&](const Point& q) { return hit[box.index(q)] != 0; });
}

IdealFrame cartesian_product(const std::vector<IdealFrame>& factors, const std::vector<BranchSet>& blocks) {
  if (factors.size() != blocks.size() || factors.empty()) {
    throw PreconditionError("cartesian_product needs one block per factor");
  }
  std::size_t s = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].size() != factors[k].dim()) throw DimensionMismatch("block size differs from factor dimension");
    s += blocks[k].size();
  }
  std::vector<int> owner(s, -1);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t i : blocks[k]) {
      if (i >= s || owner[i] != -1) throw PreconditionError("blocks do not partition the branches");
      owner[i] = static_cast<int>(k);
    }
  }
  Point mu(s), gamma(s);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t a = 0; a < blocks[k].size(); ++a) {
      mu[blocks[k][a]] = factors[k].mu()[a];
      gamma[blocks[k][a]] = factors[k].gamma()[a];
    }
  }
  return IdealFrame::from_predicate(Box(mu, gamma), [&](const Point& p) {
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      Point q(blocks[k].size());
      for (std::size_t a = 0; a < blocks[k].size(); ++a) q[a] = p[blocks[k][a]];
      if (!factors[k].contains(q)) return false;
    }
    return true;
  });
}

LocalDecomposition decompose(const GoodSemigroup& S) {
  const std::size_t s = S.dim();
  const std::vector<Point> members =
      members_in(S.frame(), Box(Point::zero(s), S.gamma() + Point::ones(s)));
  // signature[i][k]: the k-th member vanishes on branch i
  std::vector<std::vector<bool>> signature(s);
  for (std::size_t i = 0; i < s; ++i)
    for (const Point& p : members) signature[i].push_back(p[i] == 0);

  LocalDecomposition out;
  std::vector<bool> placed(s, false);
  for (std::size_t i = 0; i < s; ++i) {
    if (placed[i]) continue;
    BranchSet block;
    for (std::size_t j = i; j < s; ++j) {
      if (!placed[j] && signature[j] == signature[i]) {
        block.push_back(j);
        placed[j] = true;
      }
    }
    out.blocks.push_back(block);
    out.factors.push_back(GoodSemigroup::certify(project(S.frame(), block)));
    if (!is_local(out.factors.back())) throw Error("decomposition produced a non-local factor");
  }
  return out;
}

}  // namespace goodsemi
