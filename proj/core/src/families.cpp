#include "dualpair/pairs.hpp"

#include <sstream>

namespace dualpair {

namespace {

std::string shape(char fam, int rank) {
  // Low-rank aliases used throughout the printed tables.
  if (rank == 0) return "";
  if (rank == 1) return "A1";
  if (fam == 'B' && rank == 1) return "A1";
  if ((fam == 'C' || fam == 'B') && rank == 2) return "B2";
  if (fam == 'D' && rank == 2) return "A1+A1";
  if (fam == 'D' && rank == 3) return "A3";
  return std::string(1, fam) + std::to_string(rank);
}

std::string join_shapes(std::initializer_list<std::string> parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "+";
    out += p;
  }
  return out;
}

std::vector<int> spaced(int p, int k) {
  std::vector<int> c;
  for (int i = 1; i <= k; ++i) c.push_back(i * p);
  return c;
}

}  // namespace

std::vector<FamilyInstance> classical_families(char family, int n) {
  std::vector<FamilyInstance> out;
  auto add = [&](std::string tag, bool sirr, std::vector<int> circles, std::string a,
                 std::string b) {
    out.push_back({family, n, std::move(tag), sirr, std::move(circles), std::move(a),
                   std::move(b)});
  };
  switch (family) {
    case 'A':
      // n = (k+1)p - 1, circles at p, 2p, ..., kp; the pair (A_k, A_{p-1}).
      for (int p = 2; p <= n; ++p)
        for (int k = 1; (k + 1) * p - 1 <= n; ++k)
          if ((k + 1) * p - 1 == n)
            add("S-irr", true, spaced(p, k), shape('A', k), shape('A', p - 1));
      break;
    case 'B':
      // circles at p, 2p, ..., kp on the B_n diagram; p != 2.
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; 2 * k * l + k + l <= n; ++l) {
          int p = 2 * l + 1;
          if (k * p > n) continue;
          if (2 * k * l + k + l == n)
            add("a", true, spaced(p, k), shape('B', k), shape('B', l));
        }
        for (int l = 2; 2 * k * l + l <= n; ++l) {  // p = 2l >= 4
          int p = 2 * l;
          if (k * p > n) continue;
          add("i", false, spaced(p, k),
              shape('B', k), join_shapes({shape('D', l), shape('B', n - 2 * k * l - l)}));
        }
        for (int l = 0; 2 * k * l + k + l + 1 < n; ++l) {
          int p = 2 * l + 1;
          if (k * p > n) continue;
          int d = n - 2 * k * l - k - l;
          if (d < 2) continue;
          add("ii", false, spaced(p, k),
              shape('B', k), join_shapes({shape('B', l), shape('D', d)}));
        }
      }
      break;
    case 'C':
      // Type 1: circles at p, .., kp with p = 2l.
      for (int k = 1; k <= n; ++k)
        for (int l = 1; (2 * k + 1) * l <= n; ++l) {
          int p = 2 * l;
          if (k * p > n) continue;
          if ((2 * k + 1) * l == n)
            add("1a", true, spaced(p, k), shape('B', k), shape('C', l));
          else
            add("1i", false, spaced(p, k), shape('B', k),
                join_shapes({shape('C', l), shape('C', n - (2 * k + 1) * l)}));
        }
      // Type 2: circles at p, .., kp and at alpha_n; n = (k+1)p.
      for (int k = 0; k <= n; ++k)
        for (int p = 1; (k + 1) * p <= n; ++p) {
          if ((k + 1) * p != n) continue;
          std::vector<int> circles = spaced(p, k);
          circles.push_back(n);
          if (p % 2 == 1 && p >= 3)
            add("2a", true, circles, shape('C', k + 1), shape('B', (p - 1) / 2));
          else if (p % 2 == 0 && p >= 4)
            add("2b", true, circles, shape('C', k + 1), shape('D', p / 2));
        }
      break;
    case 'D':
      // Type 1: circles at p, ..., kp; needs n >= kp + 2.
      for (int k = 1; k <= n; ++k) {
        for (int l = 2; (2 * k + 1) * l <= n; ++l) {
          int p = 2 * l;
          if (k * p + 2 > n) continue;
          if ((2 * k + 1) * l == n)
            add("1a", true, spaced(p, k), shape('B', k), shape('D', l));
          else if (l >= 3 && (2 * k + 1) * l + 1 < n)
            add("1i", false, spaced(p, k), shape('B', k),
                join_shapes({shape('D', l), shape('D', n - (2 * k + 1) * l)}));
        }
        for (int l = 0; 2 * k * l + k + l < n; ++l) {
          int p = 2 * l + 1;
          if (k * p + 2 > n) continue;
          int m = n - 2 * k * l - k - l - 1;
          if (m < 0) continue;
          add("1b", true, spaced(p, k), shape('B', k),
              join_shapes({shape('B', l), shape('B', m)}));
        }
      }
      // Type 2: circles at p, .., kp plus one fork node; n = (k+1)p, p = 2l.
      for (int k = 0; k <= n; ++k)
        for (int l = 1; (k + 1) * 2 * l <= n; ++l) {
          int p = 2 * l;
          if ((k + 1) * p != n) continue;
          for (int fork : {n, n - 1}) {
            std::vector<int> circles = spaced(p, k);
            if (!circles.empty() && circles.back() >= n - 1) circles.pop_back();
            circles.push_back(fork);
            add(fork == n ? "2a" : "2a-mirror", true, circles, shape('C', k + 1),
                shape('C', l));
          }
        }
      break;
    default:
      break;
  }
  return out;
}

}  // namespace dualpair
