#include "dualpair/characters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dualpair {

Rat AbstractRootData::form(const QVec& a, const QVec& b) const {
  return dot(a, mat_vec(dual_form, b));
}

Rat AbstractRootData::coroot_pair(const QVec& lambda, const QVec& alpha) const {
  return Rat(2) * form(lambda, alpha) / form(alpha, alpha);
}

bool AbstractRootData::dominant(const QVec& lambda) const {
  for (const QVec& a : simple_roots)
    if (coroot_pair(lambda, a) < 0) return false;
  return true;
}

QVec AbstractRootData::rho() const {
  QVec r(dual_form.rows, Rat(0));
  for (const QVec& a : positive_roots) r = r + Rat(1, 2) * a;
  return r;
}

Rat AbstractRootData::dim_of(const QVec& lambda) const {
  QVec p = rho();
  Rat num(1), den(1);
  for (const QVec& a : positive_roots) {
    num *= form(lambda + p, a);
    den *= form(p, a);
  }
  return num / den;
}

std::map<QVec, long, cmp_qvec> AbstractRootData::character(const QVec& lambda) const {
  if (!dominant(lambda)) throw std::invalid_argument("character: non-dominant highest weight");
  // Saturate the weight set: walk simple-root strings downward.
  std::set<QVec, cmp_qvec> weights{lambda};
  std::vector<QVec> queue{lambda};
  while (!queue.empty()) {
    QVec w = queue.back();
    queue.pop_back();
    for (const QVec& a : simple_roots) {
      Rat k = coroot_pair(w, a);
      if (!is_integer(k)) throw std::invalid_argument("character: non-integral weight");
      for (long i = 1; i <= to_long(k); ++i) {
        QVec nw = w - Rat(i) * a;
        if (weights.insert(nw).second) queue.push_back(nw);
      }
    }
  }
  // Freudenthal on dominant weights, descending by (lambda+rho)-distance.
  QVec p = rho();
  std::vector<QVec> dominants;
  for (const QVec& w : weights)
    if (dominant(w)) dominants.push_back(w);
  Rat top = form(lambda + p, lambda + p);
  std::sort(dominants.begin(), dominants.end(), [&](const QVec& a, const QVec& b) {
    Rat fa = form(a + p, a + p), fb = form(b + p, b + p);
    if (fa != fb) return fa > fb;
    return cmp_qvec{}(a, b);
  });
  std::map<QVec, long, cmp_qvec> mult;
  auto mult_of = [&](const QVec& w) -> long {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  };
  for (const QVec& mu : dominants) {
    if (mu == lambda) {
      mult[lambda] = 1;
      continue;
    }
    Rat denom = top - form(mu + p, mu + p);
    Rat acc(0);
    for (const QVec& a : positive_roots) {
      for (long k = 1;; ++k) {
        QVec w = mu + Rat(k) * a;
        if (!weights.count(w)) break;
        // Multiplicities are Weyl-invariant; look up via the dominant
        // representative by walking w upward.
        QVec d = w;
        for (bool moved = true; moved;) {
          moved = false;
          for (const QVec& b : simple_roots) {
            Rat c = coroot_pair(d, b);
            if (c < 0) {
              d = d - c * b;
              moved = true;
            }
          }
        }
        acc += Rat(mult_of(d)) * form(w, a);
      }
    }
    Rat m = Rat(2) * acc / denom;
    if (!is_integer(m) || m < 0) throw std::logic_error("Freudenthal produced a bad multiplicity");
    if (m > 0) mult[mu] = to_long(m);
  }
  // Spread multiplicities over the whole weight set via dominant reps.
  std::map<QVec, long, cmp_qvec> out;
  Rat dim_acc(0);
  for (const QVec& w : weights) {
    QVec d = w;
    for (bool moved = true; moved;) {
      moved = false;
      for (const QVec& b : simple_roots) {
        Rat c = coroot_pair(d, b);
        if (c < 0) {
          d = d - c * b;
          moved = true;
        }
      }
    }
    long m = mult_of(d);
    if (m > 0) {
      out[w] = m;
      dim_acc += m;
    }
  }
  if (dim_acc != dim_of(lambda))
    throw std::logic_error("character dimension mismatch against the Weyl formula");
  return out;
}

std::vector<PeeledSummand> peel_weights(const AbstractRootData& rd,
                                        std::map<QVec, long, cmp_qvec> weights) {
  std::vector<PeeledSummand> out;
  QVec p = rd.rho();
  for (;;) {
    // Drop exhausted entries, find the maximal remaining weight.
    const QVec* best = nullptr;
    Rat best_h(0);
    for (auto& [w, m] : weights) {
      if (m == 0) continue;
      if (m < 0) throw std::logic_error("peel: negative multiplicity");
      Rat h = rd.form(w, p);
      if (!best || h > best_h || (h == best_h && cmp_qvec{}(*best, w))) {
        best = &w;
        best_h = h;
      }
    }
    if (!best) break;
    QVec lambda = *best;
    if (!rd.dominant(lambda)) throw std::logic_error("peel: maximal weight is not dominant");
    long m = weights[lambda];
    auto ch = rd.character(lambda);
    for (const auto& [w, k] : ch) {
      auto it = weights.find(w);
      if (it == weights.end() || it->second < m * k)
        throw std::logic_error("peel: character does not embed in the weight multiset");
      it->second -= m * k;
    }
    out.push_back({lambda, m, rd.dim_of(lambda)});
  }
  return out;
}

}  // namespace dualpair
