#include "ncgb/families.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace ncgb {

namespace {

Polynomial br(const Polynomial& a, const Polynomial& b) { return commutator(a, b); }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// Names of the subscripts, in subscript order, per family.
std::vector<std::string> index_names(const std::string& family) {
  if (family == "f'" || family == "f''" || family == "t") return {"i", "j"};
  if (family == "g''") return {"i", "k", "j"};
  if (family == "w'" || family == "w''") return {"i", "j", "k", "l"};
  return {"i", "j", "k"};
}

// x_j^{a_j} ... x_{i-1}^{a_{i-1}}
Polynomial power_block(int j, const std::vector<int>& a) {
  Word w;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (int e = 0; e < a[s]; ++e) w.push_back(j + static_cast<int>(s));
  return Polynomial(w);
}

// All exponent vectors of the given length with sum <= max_sum, by sum then lexicographically.
std::vector<std::vector<int>> exponent_vectors(std::size_t length, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (cur.size() + 1 == length) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.push_back(e);
      self(self, left - e);
      cur.pop_back();
    }
  };
  for (int s = 0; s <= max_sum; ++s) {
    if (length == 0) {
      if (s == 0) out.emplace_back();
      continue;
    }
    rec(rec, s);
  }
  return out;
}

void add_length3(int n, std::vector<FamilyMember>& out) {
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) out.push_back({"f'", {i, j}, {}, br(br(x(i), x(j)), x(j))});
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) out.push_back({"f''", {i, j}, {}, br(x(i), br(x(i), x(j)))});
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) out.push_back({"g'", {i, j, k}, {}, br(x(i), br(x(j), x(k)))});
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) out.push_back({"g''", {i, k, j}, {}, br(br(x(i), x(k)), x(j))});
}

void require_two(int n) {
  if (n < 2) throw std::invalid_argument("the generator families need at least two variables");
  if (n > kMaxVariable) throw std::invalid_argument("too many variables");
}

}  // namespace

std::string FamilyMember::id() const {
  std::string s = family + "[" + join(indices);
  if (!exponents.empty()) s += ";" + join(exponents);
  return s + "]";
}

std::string FamilyMember::dump() const {
  auto names = index_names(family);
  std::string s = family + "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ',';
    s += names[i] + "=" + std::to_string(indices[i]);
  }
  if (family[0] == 'v' || family[0] == 'w') s += ",a=(" + join(exponents) + ")";
  return s + "]";
}

std::vector<FamilyMember> gamma3_members(int n) {
  require_two(n);
  std::vector<FamilyMember> out;
  add_length3(n, out);
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k)
        out.push_back({"h", {i, j, k}, {}, br(br(x(i), x(j)), br(x(i), x(k)))});
  return out;
}

std::vector<FamilyMember> tideal_members(int n, int bound) {
  require_two(n);
  std::vector<FamilyMember> out;
  if (bound >= 3) add_length3(n, out);
  if (bound < 4) return out;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) out.push_back({"t", {i, j}, {}, br(x(i), x(j)) * br(x(i), x(j))});
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) out.push_back({"u'", {i, j, k}, {}, br(x(i), x(j)) * br(x(i), x(k))});
  for (int i = 3; i <= n; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) out.push_back({"u''", {i, j, k}, {}, br(x(i), x(k)) * br(x(i), x(j))});

  const int spare = bound - 4;
  auto v_family = [&](const std::string& name, bool second) {
    for (int i = 3; i <= n; ++i)
      for (int j = 2; j < i; ++j)
        for (int k = 1; k < j; ++k)
          for (const auto& a : exponent_vectors(static_cast<std::size_t>(i - j), spare)) {
            Polynomial m = power_block(j, a);
            Polynomial last = second ? br(x(i), x(j)) : br(x(i), x(k));
            out.push_back({name, {i, j, k}, a, br(x(j), x(k)) * m * last});
          }
  };
  v_family("v'", false);
  v_family("v''", true);

  auto w_family = [&](const std::string& name, bool second) {
    for (int i = 4; i <= n; ++i)
      for (int j = 3; j < i; ++j)
        for (int k = 2; k < j; ++k)
          for (int l = 1; l < k; ++l)
            for (const auto& a : exponent_vectors(static_cast<std::size_t>(i - j), spare)) {
              Polynomial m = power_block(j, a);
              Polynomial p = second
                                 ? br(x(j), x(l)) * m * br(x(i), x(k)) + br(x(k), x(l)) * m * br(x(i), x(j))
                                 : br(x(j), x(k)) * m * br(x(i), x(l)) + br(x(j), x(l)) * m * br(x(i), x(k));
              out.push_back({name, {i, j, k, l}, a, std::move(p)});
            }
  };
  w_family("w'", false);
  w_family("w''", true);
  return out;
}

GeneratorSet to_generator_set(const std::vector<FamilyMember>& members) {
  std::vector<Generator> gens;
  gens.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) gens.push_back({i, members[i].id(), members[i].poly, {}});
  return GeneratorSet(std::move(gens));
}

GeneratorSet gamma3_basis(int n) { return to_generator_set(gamma3_members(n)); }

GeneratorSet tideal_basis(int n, int bound) { return to_generator_set(tideal_members(n, bound)); }

bool matches_selector(const std::string& label, const std::string& selector) {
  if (label == selector) return true;
  if (selector.find('[') != std::string::npos) return false;
  return label.compare(0, label.find('['), selector) == 0 && label.find('[') == selector.size();
}

std::vector<Polynomial> gamma3_commutator_generators(int n) {
  std::set<Polynomial> seen;
  std::vector<Polynomial> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Polynomial p = br(br(x(i), x(j)), x(k));
        if (p.is_zero() || !seen.insert(p.monic()).second) continue;
        out.push_back(std::move(p));
      }
  return out;
}

std::vector<Polynomial> sbasis_gamma3() {
  return {
      br(br(x(2), x(1)), x(1)),
      br(x(2), br(x(2), x(1))),
      br(x(3), br(x(2), x(1))),
      br(br(x(3), x(1)), x(2)),
      br(br(x(3), x(2)), br(x(3), x(1))),
  };
}

std::vector<Polynomial> sbasis_tideal() {
  return {
      br(br(x(1), x(2)), x(3)),
      br(x(1), x(2)) * x(5) * br(x(3), x(4)) + br(x(1), x(3)) * x(5) * br(x(2), x(4)),
  };
}

std::vector<Polynomial> latyshev_identities(int n) {
  auto id1 = [](const std::vector<Polynomial>& v) { return br(v[0], v[1]) * v[2] - v[2] * br(v[0], v[1]); };
  auto id2 = [](const std::vector<Polynomial>& v) { return br(v[0], v[1]) * br(v[0], v[2]); };
  auto id3 = [](const std::vector<Polynomial>& v) { return br(v[0], v[1]) * v[3] * br(v[0], v[2]); };
  auto id4 = [](const std::vector<Polynomial>& v) {
    return br(v[0], v[1]) * br(v[2], v[3]) + br(v[0], v[2]) * br(v[1], v[3]);
  };
  auto id5 = [](const std::vector<Polynomial>& v) {
    return br(v[0], v[1]) * v[4] * br(v[2], v[3]) + br(v[0], v[2]) * v[4] * br(v[1], v[3]);
  };
  struct Identity {
    int arity;
    std::function<Polynomial(const std::vector<Polynomial>&)> build;
  };
  const std::vector<Identity> identities{{3, id1}, {3, id2}, {4, id3}, {4, id4}, {5, id5}};

  std::set<Polynomial> seen;
  std::vector<Polynomial> out;
  for (const auto& ident : identities) {
    std::vector<int> choice(static_cast<std::size_t>(ident.arity), 1);
    if (n < 1) break;
    for (;;) {
      std::vector<Polynomial> vars;
      for (int c : choice) vars.push_back(x(c));
      Polynomial p = ident.build(vars);
      if (!p.is_zero() && seen.insert(p.monic()).second) out.push_back(std::move(p));
      int i = ident.arity - 1;
      while (i >= 0 && choice[i] == n) choice[i--] = 1;
      if (i < 0) break;
      ++choice[i];
    }
  }
  return out;
}

}  // namespace ncgb
