#include "eisenpole/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace eisenpole {

std::optional<TypeLabel> TypeLabel::parse(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  char series = static_cast<char>(std::toupper(s[0]));
  if (series < 'A' || series > 'G') return std::nullopt;
  std::string digits = s.substr(1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  int rank = std::atoi(digits.c_str());
  TypeLabel t{series, rank};
  return t;
}

std::string word_str(const WeylWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "w" + std::to_string(i + 1);
  return s;
}

namespace {

std::vector<std::vector<long>> cartan_matrix(const TypeLabel& t) {
  const int n = t.rank;
  auto chain = [&](std::vector<std::vector<long>>& a) {
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (t.series) {
    case 'A':
      if (n < 1 || n > 8) throw ConfigError("rank out of range for A series: " + t.str());
      chain(a);
      break;
    case 'B':
      if (n < 2 || n > 8) throw ConfigError("rank out of range for B series: " + t.str());
      chain(a);
      a[n - 2][n - 1] = -1;  // alpha_n short
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      if (n < 2 || n > 8) throw ConfigError("rank out of range for C series: " + t.str());
      chain(a);
      a[n - 2][n - 1] = -2;  // alpha_n long
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      if (n < 4 || n > 8) throw ConfigError("rank out of range for D series: " + t.str());
      for (int i = 0; i + 1 < n - 1; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw ConfigError("rank out of range for E series: " + t.str());
      // branch node 2 on node 4, chain 1,3,4,5,...
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int k = 4; k < n; ++k) link(k, k + 1);
      break;
    }
    case 'F':
      if (n != 4) throw ConfigError("F series requires rank 4");
      chain(a);
      a[1][2] = -1;  // nodes 1,2 long; 3,4 short
      a[2][1] = -2;
      break;
    case 'G':
      if (n != 2) throw ConfigError("G series requires rank 2");
      a[0][1] = -3;  // node 1 short, node 2 long
      a[1][0] = -1;
      break;
    default:
      throw ConfigError("unsupported series: " + t.str());
  }
  return a;
}

bool all_nonneg(const RootVec& v) {
  for (long c : v)
    if (c < 0) return false;
  return true;
}

}  // namespace

RootDatum RootDatum::build(const TypeLabel& type) {
  RootDatum d;
  d.type_ = type;
  d.n_ = type.rank;
  d.cartan_ = cartan_matrix(type);
  d.generate_roots();
  return d;
}

RootDatum RootDatum::build(const std::string& type_label) {
  auto t = TypeLabel::parse(type_label);
  if (!t) throw ConfigError("cannot parse group type: " + type_label);
  return build(*t);
}

// Closure of the simple (root, coroot) pairs under simple reflections; the
// pairing keeps positive_coroots index-aligned with positive_roots.
void RootDatum::generate_roots() {
  std::map<RootVec, CorootVec> found;
  std::deque<std::pair<RootVec, CorootVec>> work;
  for (int i = 0; i < n_; ++i) {
    RootVec r(n_, 0);
    CorootVec c(n_, 0);
    r[i] = c[i] = 1;
    found[r] = c;
    work.emplace_back(r, c);
  }
  while (!work.empty()) {
    auto [r, c] = work.front();
    work.pop_front();
    for (int i = 0; i < n_; ++i) {
      RootVec r2 = reflect_root(i, r);
      if (!all_nonneg(r2) || found.count(r2)) continue;
      CorootVec c2 = reflect_coroot(i, c);
      found[r2] = c2;
      work.emplace_back(r2, c2);
    }
  }
  // sorted by (height, coordinates) for reproducible indices
  std::vector<std::pair<long, RootVec>> order;
  for (auto& [r, c] : found) {
    long h = 0;
    for (long x : r) h += x;
    order.emplace_back(h, r);
  }
  std::sort(order.begin(), order.end());
  for (auto& [h, r] : order) {
    root_index_[r] = static_cast<int>(roots_.size());
    roots_.push_back(r);
    coroots_.push_back(found[r]);
  }
}

Weight RootDatum::fundamental_weight(int i) const {
  Weight w(n_, Rat(0));
  w[i] = 1;
  return w;
}

Weight RootDatum::simple_root_as_weight(int j) const {
  Weight w(n_, Rat(0));
  for (int i = 0; i < n_; ++i) w[i] = Rat(cartan_[i][j]);
  return w;
}

Weight RootDatum::root_to_weight(const RootVec& v) const {
  Weight w(n_, Rat(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) w[i] += Rat(cartan_[i][j]) * Rat(v[j]);
  return w;
}

// Gauss elimination on the Cartan matrix; n <= 8, exact.
std::vector<Rat> RootDatum::weight_to_root(const Weight& w) const {
  std::vector<std::vector<Rat>> m(n_, std::vector<Rat>(n_ + 1));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[i][j] = Rat(cartan_[i][j]);
    m[i][n_] = w[i];
  }
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    std::swap(m[col], m[piv]);
    Rat p = m[col][col];
    for (int j = col; j <= n_; ++j) m[col][j] /= p;
    for (int r = 0; r < n_; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = col; j <= n_; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<Rat> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = m[i][n_];
  return out;
}

Rat RootDatum::pair(const Weight& lambda, const CorootVec& cv) const {
  Rat s(0);
  for (int i = 0; i < n_; ++i)
    if (cv[i]) s += lambda[i] * Rat(cv[i]);
  return s;
}

long RootDatum::pair(const IWeight& lambda, const CorootVec& cv) const {
  long s = 0;
  for (int i = 0; i < n_; ++i) s += lambda[i] * cv[i];
  return s;
}

Weight RootDatum::reflect(int i, const Weight& lambda) const {
  Weight out = lambda;
  Rat c = lambda[i];
  if (c == 0) return out;
  for (int k = 0; k < n_; ++k) out[k] -= c * Rat(cartan_[k][i]);
  return out;
}

IWeight RootDatum::reflect(int i, const IWeight& lambda) const {
  IWeight out = lambda;
  long c = lambda[i];
  if (c == 0) return out;
  for (int k = 0; k < n_; ++k) out[k] -= c * cartan_[k][i];
  return out;
}

RootVec RootDatum::reflect_root(int i, const RootVec& v) const {
  RootVec out = v;
  long s = 0;
  for (int j = 0; j < n_; ++j) s += cartan_[i][j] * v[j];
  out[i] -= s;
  return out;
}

CorootVec RootDatum::reflect_coroot(int i, const CorootVec& v) const {
  CorootVec out = v;
  long s = 0;
  for (int j = 0; j < n_; ++j) s += cartan_[j][i] * v[j];
  out[i] -= s;
  return out;
}

Weight RootDatum::apply(const WeylWord& w, const Weight& lambda) const {
  Weight out = lambda;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(*it, out);
  return out;
}

IWeight RootDatum::apply(const WeylWord& w, const IWeight& lambda) const {
  IWeight out = lambda;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(*it, out);
  return out;
}

RootVec RootDatum::apply_root(const WeylWord& w, const RootVec& v) const {
  RootVec out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect_root(*it, out);
  return out;
}

// Greedy minimal left descent gives the lexicographically least reduced word.
WeylWord RootDatum::canonical(const WeylWord& w) const {
  IWeight rho_i(n_, 1);
  IWeight lambda = apply(w, rho_i);
  WeylWord out;
  for (;;) {
    int desc = -1;
    for (int i = 0; i < n_; ++i)
      if (lambda[i] < 0) {
        desc = i;
        break;
      }
    if (desc < 0) break;
    out.push_back(desc);
    lambda = reflect(desc, lambda);
  }
  return out;
}

WeylWord RootDatum::compose(const WeylWord& a, const WeylWord& b) const {
  WeylWord ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return canonical(ab);
}

WeylWord RootDatum::inverse(const WeylWord& a) const {
  WeylWord r(a.rbegin(), a.rend());
  return canonical(r);
}

int RootDatum::length(const WeylWord& w) const { return static_cast<int>(canonical(w).size()); }

bool RootDatum::equal_elements(const WeylWord& a, const WeylWord& b) const {
  return canonical(a) == canonical(b);
}

std::vector<int> RootDatum::inversions(const WeylWord& w) const {
  std::vector<int> out;
  for (int k = 0; k < num_positive(); ++k) {
    RootVec img = apply_root(w, roots_[k]);
    if (!all_nonneg(img)) out.push_back(k);
  }
  return out;
}

std::vector<int> RootDatum::levi_of(int omitted) const {
  if (omitted < 0 || omitted >= n_) throw ConfigError("parabolic index out of range");
  std::vector<int> I;
  for (int i = 0; i < n_; ++i)
    if (i != omitted) I.push_back(i);
  return I;
}

namespace {
struct IVecHash {
  std::size_t operator()(const IWeight& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (long x : v) h = h * 1099511628211ULL + static_cast<std::size_t>(x + 0x7fff);
    return h;
  }
};
}  // namespace

// BFS over the orbit of the characteristic weight of the parabolic; the
// stabilizer is exactly W_I, so orbit points biject with minimal coset
// representatives and BFS depth equals their length.
std::vector<WeylWord> RootDatum::coset_representatives(const std::vector<int>& levi) const {
  std::vector<bool> in_levi(n_, false);
  for (int i : levi) in_levi[i] = true;
  IWeight start(n_, 0);
  for (int i = 0; i < n_; ++i)
    if (!in_levi[i]) start[i] = 1;

  struct Node {
    IWeight w;
    int parent;
    int letter;
  };
  std::vector<Node> nodes;
  std::unordered_map<IWeight, int, IVecHash> seen;
  nodes.push_back({start, -1, -1});
  seen[start] = 0;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    IWeight cur = nodes[head].w;
    for (int i = 0; i < n_; ++i) {
      IWeight nxt = reflect(i, cur);
      if (nxt == cur) continue;
      if (seen.emplace(nxt, static_cast<int>(nodes.size())).second)
        nodes.push_back({std::move(nxt), static_cast<int>(head), i});
    }
  }
  std::vector<WeylWord> reps;
  reps.reserve(nodes.size());
  for (const auto& nd : nodes) {
    WeylWord w;
    int at = static_cast<int>(&nd - nodes.data());
    while (nodes[at].parent >= 0) {
      w.push_back(nodes[at].letter);
      at = nodes[at].parent;
    }
    reps.push_back(canonical(w));
  }
  std::sort(reps.begin(), reps.end(), [](const WeylWord& a, const WeylWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return reps;
}

WeylWord RootDatum::longest_element(const std::vector<int>& subset) const {
  IWeight lambda(n_, 1);
  WeylWord rev;  // letters accumulate as left multiplications
  for (;;) {
    int asc = -1;
    for (int i : subset)
      if (lambda[i] > 0) {
        asc = i;
        break;
      }
    if (asc < 0) break;
    rev.push_back(asc);
    lambda = reflect(asc, lambda);
  }
  WeylWord w(rev.rbegin(), rev.rend());
  return canonical(w);
}

WeylWord RootDatum::shortest_rep_of_longest(const std::vector<int>& P,
                                            const std::vector<int>& R) const {
  return compose(longest_element(P), longest_element(R));
}

std::pair<Weight, WeylWord> RootDatum::dominant_representative(const Weight& lambda) const {
  Weight cur = lambda;
  WeylWord rev;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < n_; ++i)
      if (cur[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    rev.push_back(neg);
    cur = reflect(neg, cur);
  }
  WeylWord w(rev.rbegin(), rev.rend());
  return {cur, canonical(w)};
}

namespace {
unsigned long factorial(int n) {
  unsigned long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}
}  // namespace

// |W_I| from the component types of the sub-diagram. B and C share the same
// order so the double-edge direction never needs to be inspected.
unsigned long RootDatum::weyl_order(const std::vector<int>& subset) const {
  std::vector<bool> in(n_, false);
  for (int i : subset) in[i] = true;
  std::vector<bool> used(n_, false);
  unsigned long total = 1;
  for (int s : subset) {
    if (used[s]) continue;
    std::vector<int> comp{s};
    used[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int j = 0; j < n_; ++j)
        if (in[j] && !used[j] && cartan_[comp[h]][j] != 0) {
          used[j] = true;
          comp.push_back(j);
        }
    int m = static_cast<int>(comp.size());
    int max_mult = 1, branch = 0;
    for (int a : comp) {
      int deg = 0;
      for (int b : comp)
        if (a != b && cartan_[a][b] != 0) {
          ++deg;
          max_mult = std::max<int>(max_mult, static_cast<int>(cartan_[a][b] * cartan_[b][a]));
        }
      branch = std::max(branch, deg);
    }
    unsigned long order;
    if (max_mult == 3)
      order = 12;  // G2
    else if (max_mult == 2 && branch == 2 && m == 4)
      order = 1152;  // F4
    else if (max_mult == 2)
      order = (1UL << m) * factorial(m);  // B_m / C_m
    else if (branch <= 2)
      order = factorial(m + 1);  // A_m
    else if (m == 6 || m == 7 || m == 8) {
      // distinguish D from E by leg lengths at the branch node
      int bn = -1;
      for (int a : comp) {
        int deg = 0;
        for (int b : comp)
          if (a != b && cartan_[a][b] != 0) ++deg;
        if (deg == 3) bn = a;
      }
      std::vector<int> legs;
      for (int b : comp)
        if (b != bn && cartan_[bn][b] != 0) {
          int len = 1, prev = bn, cur = b;
          for (;;) {
            int nxt = -1;
            for (int c : comp)
              if (c != prev && c != cur && cartan_[cur][c] != 0) nxt = c;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
            ++len;
          }
          legs.push_back(len);
        }
      std::sort(legs.begin(), legs.end());
      if (legs[0] == 1 && legs[1] == 1)
        order = (1UL << (m - 1)) * factorial(m);  // D_m
      else if (m == 6)
        order = 51840;
      else if (m == 7)
        order = 2903040;
      else
        order = 696729600;
    } else
      order = (1UL << (m - 1)) * factorial(m);  // D_m, m <= 5
    total *= order;
  }
  return total;
}

unsigned long RootDatum::weyl_order() const {
  std::vector<int> all;
  for (int i = 0; i < n_; ++i) all.push_back(i);
  return weyl_order(all);
}

bool RootDatum::minus_one_in_weyl() const {
  WeylWord w0 = longest_element([&] {
    std::vector<int> all;
    for (int i = 0; i < n_; ++i) all.push_back(i);
    return all;
  }());
  for (int i = 0; i < n_; ++i) {
    Weight img = apply(w0, fundamental_weight(i));
    for (int k = 0; k < n_; ++k)
      if (img[k] != Rat(k == i ? -1 : 0)) return false;
  }
  return true;
}

std::string RootDatum::to_json() const {
  std::ostringstream os;
  auto emit_matrix = [&](const auto& rows) {
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) os << ",";
      os << "[";
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j) os << ",";
        os << rows[i][j];
      }
      os << "]";
    }
    os << "]";
  };
  os << "{\"schema_version\":\"1\",\"type\":\"" << type_.str() << "\",\"cartan\":";
  emit_matrix(cartan_);
  os << ",\"positive_roots\":";
  emit_matrix(roots_);
  os << ",\"positive_coroots\":";
  emit_matrix(coroots_);
  os << "}";
  return os.str();
}

}  // namespace eisenpole
