#include "goodsemi/metric.hpp"

#include "goodsemi/errors.hpp"

namespace goodsemi {

namespace {

void require_endpoints(const IdealFrame& E, const Point& alpha, const Point& beta) {
  require_same_dim(E.mu(), alpha);
  require_same_dim(alpha, beta);
  if (!E.contains(alpha)) throw PreconditionError("chain start " + alpha.to_string() + " is not in the ideal");
  if (!E.contains(beta)) throw PreconditionError("chain end " + beta.to_string() + " is not in the ideal");
  if (!leq(alpha, beta)) {
    throw PreconditionError("chain endpoints not ordered: " + alpha.to_string() + " vs " + beta.to_string());
  }
}

std::vector<Point> covers(const IdealFrame& E, const Point& from, const Point& to) {
  std::vector<Point> above;
  for (const Point& p : members_in(E, Box(from, to)))
    if (p != from) above.push_back(p);
  std::vector<Point> out;
  for (const Point& p : above) {
    bool minimal = true;
    for (const Point& q : above) {
      if (lt(q, p)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

void extend(const IdealFrame& E, const Point& beta, std::vector<Point>& prefix, std::vector<Chain>& out,
            std::size_t cap) {
  if (prefix.back() == beta) {
    if (out.size() == cap) throw BoundExceeded("more than " + std::to_string(cap) + " saturated chains");
    out.push_back({prefix});
    return;
  }
  for (const Point& next : covers(E, prefix.back(), beta)) {
    prefix.push_back(next);
    extend(E, beta, prefix, out, cap);
    prefix.pop_back();
  }
}

}  // namespace

std::optional<Point> smallest_cover(const IdealFrame& E, const Point& from, const Point& to) {
  const Box box(from, to);
  for (std::size_t k = 1; k < box.size(); ++k) {
    Point p = box.point_at(k);
    if (E.contains(p)) return p;
  }
  return std::nullopt;
}

std::size_t distance_between(const IdealFrame& E, const Point& alpha, const Point& beta) {
  require_endpoints(E, alpha, beta);
  std::size_t steps = 0;
  Point current = alpha;
  while (current != beta) {
    // beta itself is a candidate, so a cover always exists.
    current = *smallest_cover(E, current, beta);
    ++steps;
  }
  return steps;
}

long long relative_distance(const GoodIdeal& E, const GoodIdeal& F) {
  if (!is_subset(E.frame(), F.frame())) throw PreconditionError("relative_distance: E is not contained in F");
  const Point gamma_e = conductor(E.frame());
  return static_cast<long long>(distance_between(F.frame(), F.frame().mu(), gamma_e)) -
         static_cast<long long>(distance_between(E.frame(), E.frame().mu(), gamma_e));
}

long long relative_distance_checked(const IdealFrame& E, const IdealFrame& F, std::size_t cap) {
  if (!is_subset(E, F)) throw PreconditionError("relative_distance: E is not contained in F");
  const Point gamma_e = conductor(E);
  const std::set<std::size_t> in_f = chain_lengths(F, F.mu(), gamma_e, cap);
  const std::set<std::size_t> in_e = chain_lengths(E, E.mu(), gamma_e, cap);
  if (in_f.size() != 1 || in_e.size() != 1) {
    throw PreconditionError("relative_distance: saturated chains of unequal length, (E4) fails");
  }
  return static_cast<long long>(*in_f.begin()) - static_cast<long long>(*in_e.begin());
}

std::vector<Chain> all_saturated_chains(const IdealFrame& E, const Point& alpha, const Point& beta,
                                        std::size_t cap) {
  require_endpoints(E, alpha, beta);
  std::vector<Chain> out;
  std::vector<Point> prefix{alpha};
  extend(E, beta, prefix, out, cap);
  return out;
}

std::set<std::size_t> chain_lengths(const IdealFrame& E, const Point& alpha, const Point& beta, std::size_t cap) {
  std::set<std::size_t> lengths;
  for (const Chain& c : all_saturated_chains(E, alpha, beta, cap)) lengths.insert(c.length());
  return lengths;
}

}  // namespace goodsemi
