#include "dd/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dd {

// ---------------- GF tables ----------------

namespace {

// primitive polynomials over F_p, lowest degree first, monic (x^k + ... )
// for the handful of fields the catalog uses
std::vector<int> primitive_poly(int p, int k) {
  if (k == 1) return {0, 1};  // unused; prime fields use a primitive root
  if (p == 2 && k == 2) return {1, 1, 1};       // x^2 + x + 1
  if (p == 2 && k == 3) return {1, 1, 0, 1};    // x^3 + x + 1
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1}; // x^4 + x + 1
  if (p == 3 && k == 2) return {2, 2, 1};       // x^2 - x - 1 (x^2+2x+2)
  throw std::invalid_argument("unsupported finite field");
}

int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int x = g % p, ord = 1;
    while (x != 1) {
      x = x * g % p;
      ++ord;
    }
    if (ord == p - 1) return g;
  }
  return 1;  // p == 2
}

}  // namespace

GFTable::GFTable(int p, int k) : p_(p), k_(k), q_(1) {
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ > 16) throw std::invalid_argument("field too large (q <= 16)");
  auto enc = [&](const std::vector<int>& digits) {
    int v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + ((digits[i] % p_ + p_) % p_);
    return v;
  };
  auto dec = [&](int v) {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  };
  add_.resize(q_ * q_);
  mul_.assign(q_ * q_, 0);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = dec(a);
    for (int b = 0; b < q_; ++b) {
      auto db = dec(b);
      std::vector<int> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = da[i] + db[i];
      add_[a * q_ + b] = enc(s);
    }
    std::vector<int> m(k_);
    for (int i = 0; i < k_; ++i) m[i] = -da[i];
    neg_[a] = enc(m);
  }
  // multiplication via exp/log of the primitive element
  std::vector<int> exps;
  if (k_ == 1) {
    gen1_ = primitive_root(p_);
    int x = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      exps.push_back(x);
      x = x * gen1_ % p_;
    }
  } else {
    auto poly = primitive_poly(p_, k_);
    std::vector<int> cur(k_, 0);
    cur[0] = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      exps.push_back(enc(cur));
      // multiply by x mod poly
      std::vector<int> nxt(k_, 0);
      int carry = cur[k_ - 1];
      for (int j = k_ - 1; j >= 1; --j) nxt[j] = cur[j - 1];
      if (carry)
        for (int j = 0; j < k_; ++j) nxt[j] -= carry * poly[j];
      for (auto& d : nxt) d = (d % p_ + p_) % p_;
      cur = nxt;
    }
  }
  std::vector<int> log(q_, -1);
  for (int i = 0; i < q_ - 1; ++i) log[exps[i]] = i;
  for (int a = 1; a < q_; ++a)
    if (log[a] < 0) throw std::logic_error("field generator is not primitive");
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b) mul_[a * q_ + b] = exps[(log[a] + log[b]) % (q_ - 1)];
  for (int a = 1; a < q_; ++a) inv_[a] = exps[(q_ - 1 - log[a]) % (q_ - 1)];
}

int GFTable::scalar(int c) const {
  int v = (c % p_ + p_) % p_;
  return v;  // prime-subfield elements encode as plain digits
}

std::shared_ptr<const GFTable> GFTable::get(int p, int k) {
  static std::map<std::pair<int, int>, std::shared_ptr<const GFTable>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto t = std::shared_ptr<const GFTable>(new GFTable(p, k));
  cache.emplace(key, t);
  return t;
}

// ---------------- element ops ----------------

GroupElement element_mul(const GroupElement& x, const GroupElement& y) {
  if (x.index() != y.index()) throw std::invalid_argument("mixed element realizations");
  if (std::holds_alternative<PermElem>(x)) {
    const auto& a = std::get<PermElem>(x).img;
    const auto& b = std::get<PermElem>(y).img;
    PermElem r;
    r.img.resize(a.size());
    // (x*y)(i) = x(y(i))
    for (std::size_t i = 0; i < a.size(); ++i) r.img[i] = a[b[i]];
    return r;
  }
  if (std::holds_alternative<MatGFElem>(x)) {
    const auto& a = std::get<MatGFElem>(x);
    const auto& b = std::get<MatGFElem>(y);
    const GFTable& F = *a.field;
    int n = a.dim;
    MatGFElem r{a.field, n, std::vector<std::uint8_t>(n * n, 0)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int k = 0; k < n; ++k) s = F.add(s, F.mul(a.a[i * n + k], b.a[k * n + j]));
        r.a[i * n + j] = static_cast<std::uint8_t>(s);
      }
    return r;
  }
  const auto& a = std::get<MatCycElem>(x);
  const auto& b = std::get<MatCycElem>(y);
  int n = a.dim;
  MatCycElem r{n, {}};
  r.a.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyclotomic s = Cyclotomic::zero(a.a[0].conductor());
      for (int k = 0; k < n; ++k) s += a.a[i * n + k] * b.a[k * n + j];
      r.a.push_back(std::move(s));
    }
  return r;
}

GroupElement element_identity(const GroupElement& like) {
  if (std::holds_alternative<PermElem>(like)) {
    PermElem e;
    e.img.resize(std::get<PermElem>(like).img.size());
    std::iota(e.img.begin(), e.img.end(), 0);
    return e;
  }
  if (std::holds_alternative<MatGFElem>(like)) {
    const auto& m = std::get<MatGFElem>(like);
    MatGFElem e{m.field, m.dim, std::vector<std::uint8_t>(m.dim * m.dim, 0)};
    for (int i = 0; i < m.dim; ++i) e.a[i * m.dim + i] = static_cast<std::uint8_t>(m.field->scalar(1));
    return e;
  }
  const auto& m = std::get<MatCycElem>(like);
  int n = m.dim, cond = m.a[0].conductor();
  MatCycElem e{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.a.push_back(i == j ? Cyclotomic::one(cond) : Cyclotomic::zero(cond));
  return e;
}

void check_invertible(const GroupElement& g) {
  if (std::holds_alternative<PermElem>(g)) {
    const auto& p = std::get<PermElem>(g).img;
    std::vector<bool> seen(p.size(), false);
    for (auto v : p) {
      if (v >= p.size() || seen[v]) throw std::invalid_argument("invalid generator");
      seen[v] = true;
    }
    return;
  }
  if (std::holds_alternative<MatGFElem>(g)) {
    auto m = std::get<MatGFElem>(g);
    const GFTable& F = *m.field;
    int n = m.dim;
    // gaussian elimination rank check
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
      int piv = -1;
      for (int r = row; r < n; ++r)
        if (m.a[r * n + col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      for (int j = 0; j < n; ++j) std::swap(m.a[row * n + j], m.a[piv * n + j]);
      int pinv = F.inv(m.a[row * n + col]);
      for (int r = 0; r < n; ++r) {
        if (r == row || m.a[r * n + col] == 0) continue;
        int f = F.mul(m.a[r * n + col], pinv);
        for (int j = 0; j < n; ++j)
          m.a[r * n + j] = static_cast<std::uint8_t>(
              F.add(m.a[r * n + j], F.neg(F.mul(f, m.a[row * n + j]))));
      }
      ++row;
    }
    if (row < n) throw std::invalid_argument("invalid generator");
    return;
  }
  // exact determinant for cyclotomic matrices (dims are 2 or 3 in practice)
  const auto& m = std::get<MatCycElem>(g);
  int n = m.dim;
  Cyclotomic det;
  if (n == 1) {
    det = m.a[0];
  } else if (n == 2) {
    det = m.a[0] * m.a[3] - m.a[1] * m.a[2];
  } else if (n == 3) {
    det = m.a[0] * (m.a[4] * m.a[8] - m.a[5] * m.a[7]) -
          m.a[1] * (m.a[3] * m.a[8] - m.a[5] * m.a[6]) +
          m.a[2] * (m.a[3] * m.a[7] - m.a[4] * m.a[6]);
  } else {
    throw std::invalid_argument("cyclotomic matrices supported up to dim 3");
  }
  if (det.is_zero()) throw std::invalid_argument("invalid generator");
}

std::string element_to_string(const GroupElement& g) {
  std::ostringstream os;
  if (std::holds_alternative<PermElem>(g)) {
    const auto& p = std::get<PermElem>(g).img;
    // cycle notation, 1-based
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i] || p[i] == i) continue;
      os << "(";
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) os << " ";
        os << (j + 1);
        first = false;
        j = p[j];
      }
      os << ")";
      any = true;
    }
    if (!any) os << "()";
  } else if (std::holds_alternative<MatGFElem>(g)) {
    const auto& m = std::get<MatGFElem>(g);
    os << "[";
    for (int i = 0; i < m.dim; ++i) {
      os << (i ? ";" : "");
      for (int j = 0; j < m.dim; ++j) os << (j ? "," : "") << int(m.a[i * m.dim + j]);
    }
    os << "]@GF(" << m.field->q() << ")";
  } else {
    const auto& m = std::get<MatCycElem>(g);
    os << "[";
    for (int i = 0; i < m.dim; ++i) {
      os << (i ? ";" : "");
      for (int j = 0; j < m.dim; ++j) os << (j ? "," : "") << m.a[i * m.dim + j].to_string();
    }
    os << "]";
  }
  return os.str();
}

std::size_t ElementHash::operator()(const GroupElement& g) const {
  std::uint64_t h = 0x243f6a8885a308d3ULL ^ g.index();
  auto mix = [&h](std::uint64_t v) {
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    h = (h ^ v) * 0xc4ceb9fe1a85ec53ULL;
  };
  if (std::holds_alternative<PermElem>(g)) {
    for (auto v : std::get<PermElem>(g).img) mix(v + 1);
  } else if (std::holds_alternative<MatGFElem>(g)) {
    const auto& m = std::get<MatGFElem>(g);
    mix(m.field->q());
    for (auto v : m.a) mix(v + 1);
  } else {
    for (const auto& c : std::get<MatCycElem>(g).a) mix(c.hash());
  }
  return static_cast<std::size_t>(h);
}

// ---------------- enumeration ----------------

GroupData enumerate(std::vector<GroupElement> generators, int limit) {
  GroupData g;
  if (generators.empty()) {
    // trivial group on one point
    PermElem e;
    e.img = {0};
    generators.clear();
    g.elements_.push_back(e);
    g.index_.emplace(g.elements_[0], 0);
    g.n_ = 1;
    g.mt_ = {0};
    g.inv_ = {0};
  } else {
    for (const auto& gen : generators) check_invertible(gen);
    GroupElement e = element_identity(generators[0]);
    g.elements_.push_back(e);
    g.index_.emplace(e, 0);
    std::vector<std::vector<int>> gtab;  // gtab[i][s] = index of elements[i]*gen[s]
    std::vector<std::pair<int, int>> parent{{-1, -1}};  // (parent index, generator)
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      while (static_cast<int>(gtab.size()) <= i) gtab.emplace_back(generators.size(), -1);
      for (std::size_t s = 0; s < generators.size(); ++s) {
        GroupElement v = element_mul(g.elements_[i], generators[s]);
        auto it = g.index_.find(v);
        int j;
        if (it == g.index_.end()) {
          j = static_cast<int>(g.elements_.size());
          if (j >= limit) throw std::runtime_error("order overflow");
          g.elements_.push_back(std::move(v));
          g.index_.emplace(g.elements_.back(), j);
          parent.emplace_back(i, static_cast<int>(s));
          queue.push_back(j);
        } else {
          j = it->second;
        }
        gtab[i][s] = j;
      }
    }
    while (gtab.size() < g.elements_.size()) gtab.emplace_back(generators.size(), -1);
    g.n_ = static_cast<int>(g.elements_.size());
    const int n = g.n_;
    if (n > 16384) throw std::runtime_error("order overflow");
    // full multiplication table, built incrementally along the BFS tree:
    // column(e) = id, column(j) = column(parent(j)) followed by generator step
    g.mt_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) g.mt_[static_cast<std::size_t>(i) * n + 0] = i;
    for (int j = 1; j < n; ++j) {  // discovery order == index order, parents first
      auto [pj, s] = parent[j];
      for (int i = 0; i < n; ++i) {
        int ip = g.mt_[static_cast<std::size_t>(i) * n + pj];
        g.mt_[static_cast<std::size_t>(i) * n + j] = gtab[ip][s];
      }
    }
    g.inv_.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.mul(i, j) == 0) {
          g.inv_[i] = j;
          break;
        }
  }

  const int n = g.n_;
  // conjugacy classes by orbit under generator conjugation, seeded in index
  // order so each representative is the minimal member
  std::vector<int> gen_idx;
  for (const auto& gen : generators) gen_idx.push_back(g.index_.at(gen));
  g.cls_of_.assign(n, -1);
  g.witness_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    if (g.cls_of_[x] >= 0) continue;
    int ci = static_cast<int>(g.classes_.size());
    ConjugacyClass cls;
    cls.representative = x;
    g.cls_of_[x] = ci;
    g.witness_[x] = 0;
    std::vector<int> stack{x};
    std::vector<int> members{x};
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int gi : gen_idx) {
        int z = g.mul(g.mul(gi, y), g.inv_[gi]);
        if (g.cls_of_[z] < 0) {
          g.cls_of_[z] = ci;
          g.witness_[z] = g.mul(gi, g.witness_[y]);
          members.push_back(z);
          stack.push_back(z);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cls.members = std::move(members);
    // order of the representative
    int k = 1, y = x;
    while (y != 0) {
      y = g.mul(y, x);
      ++k;
    }
    cls.rep_order = k;
    g.classes_.push_back(std::move(cls));
  }
  // sort classes: identity first via rep_order, ties by size then minimal member
  std::vector<int> perm(g.classes_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& ca = g.classes_[a];
    const auto& cb = g.classes_[b];
    if (ca.rep_order != cb.rep_order) return ca.rep_order < cb.rep_order;
    if (ca.members.size() != cb.members.size()) return ca.members.size() < cb.members.size();
    return ca.representative < cb.representative;
  });
  std::vector<ConjugacyClass> sorted;
  sorted.reserve(g.classes_.size());
  std::vector<int> newpos(g.classes_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    newpos[perm[i]] = static_cast<int>(i);
    sorted.push_back(std::move(g.classes_[perm[i]]));
  }
  g.classes_ = std::move(sorted);
  for (int x = 0; x < n; ++x) g.cls_of_[x] = newpos[g.cls_of_[x]];
  // centralizers of representatives
  for (auto& cls : g.classes_) {
    for (int h = 0; h < n; ++h)
      if (g.mul(h, cls.representative) == g.mul(cls.representative, h))
        cls.centralizer.push_back(h);
  }
  // inverse class map, exponent
  g.inverse_class_.resize(g.classes_.size());
  int expo = 1;
  for (std::size_t c = 0; c < g.classes_.size(); ++c) {
    g.inverse_class_[c] = g.cls_of_[g.inv_[g.classes_[c].representative]];
    expo = static_cast<int>(std::lcm(expo, g.classes_[c].rep_order));
  }
  g.exponent_ = expo;
  // center and derived subgroup
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int gi : gen_idx)
      if (g.mul(x, gi) != g.mul(gi, x)) {
        central = false;
        break;
      }
    if (central) g.center_.push_back(x);
  }
  if (g.center_.empty()) g.center_.push_back(0);
  {
    // commutators of all pairs generate G'; closure under multiplication
    std::vector<bool> in(n, false);
    std::vector<int> comms;
    in[0] = true;
    comms.push_back(0);
    for (int a = 0; a < n; ++a)
      for (int b : gen_idx) {
        int c = g.mul(g.mul(g.inv_[a], g.inv_[b]), g.mul(a, b));
        if (!in[c]) {
          in[c] = true;
          comms.push_back(c);
        }
      }
    // normal closure: conjugate by generators, then close under products
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur = comms;
      for (int x : cur)
        for (int gi : gen_idx) {
          int z = g.mul(g.mul(gi, x), g.inv_[gi]);
          if (!in[z]) {
            in[z] = true;
            comms.push_back(z);
            grew = true;
          }
        }
      cur = comms;
      for (std::size_t i = 0; i < comms.size(); ++i)
        for (std::size_t j = 0; j < comms.size(); ++j) {
          int z = g.mul(comms[i], comms[j]);
          if (!in[z]) {
            in[z] = true;
            comms.push_back(z);
            grew = true;
          }
        }
    }
    std::sort(comms.begin(), comms.end());
    g.derived_ = std::move(comms);
  }
  return g;
}

int GroupData::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

int GroupData::element_order(int element) const {
  int k = 1, y = element;
  while (y != 0) {
    y = mul(y, element);
    ++k;
  }
  return k;
}

int GroupData::power_class(int c, long k) const {
  int rep = classes_[c].representative;
  long e = ((k % element_order(rep)) + element_order(rep)) % element_order(rep);
  int y = 0;
  for (long i = 0; i < e; ++i) y = mul(y, rep);
  return cls_of_[y];
}

std::vector<int> centralizer(const GroupData& g, int element) {
  std::vector<int> out;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, element) == g.mul(element, h)) out.push_back(h);
  return out;
}

std::vector<int> centralizer(const GroupData& g, const GroupElement& x) {
  int i = g.index_of(x);
  if (i < 0) throw std::invalid_argument("foreign element");
  return centralizer(g, i);
}

std::vector<int> coset_representatives(const GroupData& g, const std::vector<int>& subgroup) {
  // closure check
  std::vector<bool> in(g.order(), false);
  for (int h : subgroup) in[h] = true;
  if (subgroup.empty() || !in[0]) throw std::invalid_argument("not a subgroup");
  for (int a : subgroup)
    for (int b : subgroup)
      if (!in[g.mul(a, b)]) throw std::invalid_argument("not a subgroup");
  std::vector<bool> seen(g.order(), false);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int h : subgroup) seen[g.mul(x, h)] = true;
  }
  return reps;
}

StructureInvariants structure_invariants(const GroupData& g) {
  StructureInvariants s;
  s.center = g.center();
  s.derived_subgroup = g.derived_subgroup();
  s.exponent = g.exponent();
  s.abelianization_order = g.abelianization_order();
  return s;
}

// ---------------- subgroup view ----------------

SubgroupView make_subgroup(const GroupData& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  SubgroupView h;
  h.parent = &g;
  h.elems = std::move(elements);
  if (h.elems.empty() || h.elems[0] != 0) throw std::invalid_argument("not a subgroup");
  h.local.assign(g.order(), -1);
  for (std::size_t i = 0; i < h.elems.size(); ++i) h.local[h.elems[i]] = static_cast<int>(i);
  const int n = h.order();
  h.mt.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = g.mul(h.elems[a], h.elems[b]);
      int lp = h.local[p];
      if (lp < 0) throw std::invalid_argument("not a subgroup");
      h.mt[static_cast<std::size_t>(a) * n + b] = lp;
    }
  h.inv.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (h.mul(a, b) == 0) {
        h.inv[a] = b;
        break;
      }
  // conjugacy classes by full conjugation sweep
  h.cls_of.assign(n, -1);
  std::vector<ConjugacyClass> classes;
  auto order_of = [&](int x) {
    int k = 1, y = x;
    while (y != 0) {
      y = h.mul(y, x);
      ++k;
    }
    return k;
  };
  for (int x = 0; x < n; ++x) {
    if (h.cls_of[x] >= 0) continue;
    int ci = static_cast<int>(classes.size());
    std::vector<bool> seen(n, false);
    std::vector<int> members;
    for (int t = 0; t < n; ++t) {
      int z = h.mul(h.mul(h.inv[t], x), t);
      if (!seen[z]) {
        seen[z] = true;
        members.push_back(z);
      }
    }
    std::sort(members.begin(), members.end());
    for (int y : members) h.cls_of[y] = ci;
    ConjugacyClass cls;
    cls.representative = members[0];
    cls.members = std::move(members);
    cls.rep_order = order_of(cls.representative);
    classes.push_back(std::move(cls));
  }
  std::vector<int> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (classes[a].rep_order != classes[b].rep_order) return classes[a].rep_order < classes[b].rep_order;
    if (classes[a].members.size() != classes[b].members.size())
      return classes[a].members.size() < classes[b].members.size();
    return classes[a].representative < classes[b].representative;
  });
  std::vector<int> newpos(classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) newpos[perm[i]] = static_cast<int>(i);
  std::vector<ConjugacyClass> sorted;
  for (int p : perm) sorted.push_back(std::move(classes[p]));
  h.classes = std::move(sorted);
  for (int x = 0; x < n; ++x) h.cls_of[x] = newpos[h.cls_of[x]];
  for (auto& cls : h.classes)
    for (int t = 0; t < n; ++t)
      if (h.mul(t, cls.representative) == h.mul(cls.representative, t)) cls.centralizer.push_back(t);
  int expo = 1;
  for (const auto& cls : h.classes) expo = static_cast<int>(std::lcm(expo, cls.rep_order));
  h.exponent = expo;
  return h;
}

SubgroupView whole_group_view(const GroupData& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(g, std::move(all));
}

int SubgroupView::element_order(int a) const {
  int k = 1, y = a;
  while (y != 0) {
    y = mul(y, a);
    ++k;
  }
  return k;
}

int SubgroupView::inverse_class(int c) const { return cls_of[inv[classes[c].representative]]; }

int SubgroupView::power_class(int c, long k) const {
  int rep = classes[c].representative;
  int m = element_order(rep);
  long e = ((k % m) + m) % m;
  int y = 0;
  for (long i = 0; i < e; ++i) y = mul(y, rep);
  return cls_of[y];
}

// ---------------- user input ----------------

GroupData group_from_cycles_text(const std::string& text, int limit) {
  std::vector<std::vector<std::vector<int>>> gens_cycles;
  std::istringstream is(text);
  std::string line;
  int max_point = 0;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t\r")] == '#') continue;
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while ((pos = line.find('(', pos)) != std::string::npos) {
      auto end = line.find(')', pos);
      if (end == std::string::npos) throw std::invalid_argument("unbalanced cycle notation");
      std::istringstream cyc(line.substr(pos + 1, end - pos - 1));
      std::vector<int> points;
      std::string tok;
      while (cyc >> tok) {
        // allow comma separators
        for (auto& ch : tok)
          if (ch == ',') ch = ' ';
        std::istringstream ts(tok);
        int v;
        while (ts >> v) {
          points.push_back(v - 1);
          max_point = std::max(max_point, v);
        }
      }
      if (!points.empty()) cycles.push_back(points);
      pos = end + 1;
    }
    gens_cycles.push_back(cycles);
  }
  if (max_point == 0) max_point = 1;
  std::vector<GroupElement> gens;
  for (const auto& cycles : gens_cycles) {
    PermElem p;
    p.img.resize(max_point);
    std::iota(p.img.begin(), p.img.end(), 0);
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (cyc[i] < 0 || cyc[i] >= max_point) throw std::invalid_argument("invalid generator");
        p.img[cyc[i]] = static_cast<std::uint16_t>(cyc[(i + 1) % cyc.size()]);
      }
    gens.push_back(std::move(p));
  }
  return enumerate(std::move(gens), limit);
}

}  // namespace dd
