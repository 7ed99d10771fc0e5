#pragma once

/**
 * @file uq.hpp
 * @brief The simply-connected quantised enveloping algebra U_q(sl(n)), 2 <= n <= 4.
 *
 * Generators: root vectors E_[a,b], F_[a,b] for 1 <= a <= b <= n-1, and the
 * group-likes q^lambda for integral weights lambda (w-coordinates). Compound
 * root vectors are
 *
 *   E_[a,d] = E_d E_[a,d-1] - q^-1 E_[a,d-1] E_d
 *   F_[a,d] = q F_[a,d-1] F_d - F_d F_[a,d-1]
 *
 * Elements are linear combinations of normal words F... q^lambda E... where
 * both root-vector words are non-decreasing in the interval order
 * [1,1] < [1,2] < ... < [1,n-1] < [2,2] < ... (lexicographic on intervals).
 * The straightening rules between root vectors are quadratic; the E-F
 * exchange rules of compound vectors are derived at construction by
 * expanding both sides into simple generators. The resulting rule set is
 * certified by the confluence checker before the algebra is usable.
 *
 * Hopf structure:
 *   Delta(E_i) = E_i (x) q^{-H_i} + q^{H_i} (x) E_i   (same form for F_i)
 *   Delta(q^l) = q^l (x) q^l
 *   S(E_i) = -q^-1 E_i, S(F_i) = -q F_i, S(q^l) = q^-l
 *   eps(E_i) = eps(F_i) = 0, eps(q^l) = 1
 */

#include "qlie/lincomb.hpp"
#include "qlie/rewrite.hpp"
#include "qlie/scalar.hpp"
#include "qlie/weight.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qlie::uq {

using rw::Letter;
using rw::Word;
using Element = rw::FreeElement;
using WordPair = std::pair<Word, Word>;

struct PairOrder {
  bool operator()(const WordPair& a, const WordPair& b) const {
    rw::TermOrder t;
    if (t(a.first, b.first)) return true;
    if (t(b.first, a.first)) return false;
    return t(a.second, b.second);
  }
};

using TensorElement = LinComb<WordPair, PairOrder>;

struct Root {
  int a = 1, b = 1;
  int height() const { return b - a + 1; }
  friend bool operator==(const Root&, const Root&) = default;
};

/// Factorisation of a normal word into lower part, weight and upper part.
struct Blocks {
  Word f;
  Weight w;
  Word e;
};

class Algebra {
 public:
  /// Builds the rule set; with certify = true aborts unless it is confluent.
  explicit Algebra(int n, bool certify = true) : n_(n), rank_(n - 1) {
    if (n < 2 || n > kMaxRank + 1) throw std::invalid_argument("unsupported n = " + std::to_string(n) + " (need 2 <= n <= 4)");
    for (int a = 1; a <= rank_; ++a)
      for (int b = a; b <= rank_; ++b) roots_.push_back({a, b});
    const std::size_t m = roots_.size();
    std::vector<rw::Symbol> alphabet;
    for (std::size_t k = 0; k < m; ++k) alphabet.push_back({"F" + label(roots_[k]), roots_[k].height(), rw::Side::lower, -root_vector(k)});
    alphabet.push_back({"q", 0, rw::Side::weight, Weight{}});
    for (std::size_t k = 0; k < m; ++k) alphabet.push_back({"E" + label(roots_[k]), roots_[k].height(), rw::Side::upper, root_vector(k)});
    rules_ = rw::RuleSet(std::move(alphabet), rank_);
    build_definitions();
    build_block_rules();
    build_cross_rules();
    if (certify) {
      certificate_ = rw::check_confluence(rules_);
      if (!certificate_->confluent()) {
        for (const auto& v : certificate_->verdicts)
          if (!v.resolved)
            throw std::logic_error("U_q(sl" + std::to_string(n_) + ") rules are not confluent at " + v.word + ": " +
                                   (v.error.empty() ? v.difference : v.error));
      }
    }
  }

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  int n() const { return n_; }
  int rank() const { return rank_; }
  const rw::RuleSet& rules() const { return rules_; }
  const std::optional<rw::ConfluenceReport>& certificate() const { return certificate_; }
  const std::vector<Root>& roots() const { return roots_; }

  std::size_t root_index(int a, int b) const {
    for (std::size_t k = 0; k < roots_.size(); ++k)
      if (roots_[k].a == a && roots_[k].b == b) return k;
    throw std::out_of_range("no root [" + std::to_string(a) + "," + std::to_string(b) + "]");
  }
  std::size_t f_symbol(std::size_t k) const { return k; }
  std::size_t e_symbol(std::size_t k) const { return roots_.size() + 1 + k; }

  /// H-coordinates of the positive root E_[a,b].
  Weight root_vector(std::size_t k) const {
    Weight w;
    for (int i = roots_[k].a; i <= roots_[k].b; ++i) w[static_cast<std::size_t>(i - 1)] = 1;
    return w;
  }

  // ---- elements -------------------------------------------------------------

  Element one() const { return Element(Word{}); }
  Element scalar(const Scalar& c) const { return Element(Word{}, c); }
  Element K(const Weight& w) const { return w.is_zero() ? one() : Element(Word{rules_.weight_letter(w)}); }
  /// q^{H_i}
  Element KH(int i, int power = 1) const { return K(power * simple_root(rank_, i)); }
  Element E(int i) const { return Element(Word{e_letter(root_index(i, i))}); }
  Element F(int i) const { return Element(Word{f_letter(root_index(i, i))}); }
  Element E_root(int a, int b) const { return Element(Word{e_letter(root_index(a, b))}); }
  Element F_root(int a, int b) const { return Element(Word{f_letter(root_index(a, b))}); }
  Letter e_letter(std::size_t k) const { return rules_.letter(e_symbol(k)); }
  Letter f_letter(std::size_t k) const { return rules_.letter(f_symbol(k)); }

  bool is_weight_letter(const Letter& l) const { return static_cast<int>(l.sym) == rules_.weight_symbol(); }
  bool is_upper(const Letter& l) const { return rules_.alphabet()[l.sym].side == rw::Side::upper; }
  bool is_lower(const Letter& l) const { return rules_.alphabet()[l.sym].side == rw::Side::lower; }
  bool is_simple(const Letter& l) const {
    return !is_weight_letter(l) && rules_.alphabet()[l.sym].degree == 1;
  }

  /// Root weight (H-coordinates) of a word: E letters add, F letters subtract.
  Weight weight_of(const Word& w) const {
    Weight s;
    for (const auto& l : w)
      if (!is_weight_letter(l)) s = s + rules_.alphabet()[l.sym].root;
    return s;
  }

  /// Root weight of a homogeneous element; nullopt for zero or mixed weights.
  std::optional<Weight> weight_of(const Element& x) const {
    std::optional<Weight> w;
    for (const auto& [m, c] : x) {
      const Weight k = weight_of(m);
      if (w && *w != k) return std::nullopt;
      w = k;
    }
    return w;
  }

  Blocks split(const Word& w) const {
    Blocks b;
    for (const auto& l : w) {
      if (is_weight_letter(l)) b.w = b.w + l.w;
      else if (is_upper(l)) b.e.push_back(l);
      else b.f.push_back(l);
    }
    return b;
  }

  Element normal_form(const Element& x) const { return rules_.reduce(x); }

  std::string str(const Element& x) const { return rules_.element_string(x); }
  std::string str(const TensorElement& t) const {
    if (t.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
      append_term(s, it->second, rules_.word_string(it->first.first) + " (x) " + rules_.word_string(it->first.second), first);
      first = false;
    }
    return s;
  }

  // ---- multiplication --------------------------------------------------------

  /// Product of two normal words.
  Element multiply(const Word& u, const Word& w) const {
    const Blocks bu = split(u), bw = split(w);
    const Element p = exchange(bu.e, bw.f);
    Element out;
    for (const auto& [pw, pc] : p) {
      const Blocks bp = split(pw);
      const int ex = pairing(weight_of(bp.f), bu.w) - pairing(weight_of(bp.e), bw.w);
      const Scalar c = ex == 0 ? pc : pc * Scalar::v_pow(ex);
      const Element left = rules_.multiply_onto_normal(bu.f, bp.f);
      const Element right = rules_.multiply_onto_normal(bp.e, bw.e);
      const Weight wt = bu.w + bp.w + bw.w;
      for (const auto& [lw, lc] : left) {
        const Scalar clc = c * lc;
        for (const auto& [rw_, rc] : right) {
          Word x = lw;
          if (!wt.is_zero()) x.push_back(rules_.weight_letter(wt));
          x.insert(x.end(), rw_.begin(), rw_.end());
          out.add(std::move(x), clc * rc);
        }
      }
    }
    return out;
  }

  Element multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [u, cu] : a)
      for (const auto& [w, cw] : b) out.add_scaled(multiply(u, w), cu * cw);
    return out;
  }

  Element multiply(std::initializer_list<Element> xs) const {
    Element acc = one();
    for (const auto& x : xs) acc = multiply(acc, x);
    return acc;
  }

  Element commutator(const Element& a, const Element& b) const { return multiply(a, b) - multiply(b, a); }

  /// Generic product: concatenate and reduce through the rewriting engine only.
  Element multiply_by_reduction(const Element& a, const Element& b) const {
    Element cat;
    for (const auto& [u, cu] : a)
      for (const auto& [w, cw] : b) {
        Word x = u;
        x.insert(x.end(), w.begin(), w.end());
        cat.add(std::move(x), cu * cw);
      }
    return rules_.normal_form(cat);
  }

  /// x^k for k >= 0.
  Element power(const Element& x, int k) const {
    Element r = one();
    for (int i = 0; i < k; ++i) r = multiply(r, x);
    return r;
  }

  // ---- tensor square ------------------------------------------------------------

  TensorElement tensor(const Element& a, const Element& b) const {
    TensorElement t;
    for (const auto& [u, cu] : a)
      for (const auto& [w, cw] : b) t.add({u, w}, cu * cw);
    return t;
  }

  TensorElement multiply(const TensorElement& x, const TensorElement& y) const {
    TensorElement out;
    for (const auto& [p, cp] : x)
      for (const auto& [r, cr] : y) {
        const Element a = multiply(p.first, r.first);
        const Element b = multiply(p.second, r.second);
        const Scalar c = cp * cr;
        for (const auto& [u, cu] : a)
          for (const auto& [w, cw] : b) out.add({u, w}, c * cu * cw);
      }
    return out;
  }

  /// Multiplication map U (x) U -> U.
  Element contract(const TensorElement& t) const {
    Element out;
    for (const auto& [p, c] : t) out.add_scaled(multiply(p.first, p.second), c);
    return out;
  }

  // ---- Hopf structure -----------------------------------------------------------

  TensorElement coproduct(const Word& w) const {
    TensorElement acc = tensor(one(), one());
    for (const auto& l : w) acc = multiply(acc, coproduct_letter(l));
    return acc;
  }

  TensorElement coproduct(const Element& x) const {
    TensorElement out;
    for (const auto& [w, c] : x) out.add_scaled(coproduct(w), c);
    return out;
  }

  Element antipode(const Word& w) const {
    Element acc = one();
    for (const auto& l : w) acc = multiply(antipode_letter(l), acc);
    return acc;
  }

  Element antipode(const Element& x) const {
    Element out;
    for (const auto& [w, c] : x) out.add_scaled(antipode(w), c);
    return out;
  }

  Scalar counit(const Element& x) const {
    Scalar s;
    for (const auto& [w, c] : x) {
      bool grouplike = true;
      for (const auto& l : w) grouplike = grouplike && is_weight_letter(l);
      if (grouplike) s += c;
    }
    return s;
  }

  // ---- adjoint action ------------------------------------------------------------

  Element ad_E(int i, const Element& y) const {
    const Element k = KH(i);
    return multiply({E(i), y, k}) - Scalar::q_pow(-1) * multiply({k, y, E(i)});
  }

  Element ad_F(int i, const Element& y) const {
    const Element k = KH(i);
    return multiply({F(i), y, k}) - Scalar::q_pow(1) * multiply({k, y, F(i)});
  }

  /// q^l y q^-l: scales each monomial by q^{<weight, l>}.
  Element ad_K(const Weight& l, const Element& y) const {
    Element out;
    for (const auto& [w, c] : y) {
      const int ex = pairing(weight_of(w), l);
      out.add(w, ex == 0 ? c : c * Scalar::v_pow(ex));
    }
    return out;
  }

  /// ad of a single letter; compound root vectors go through their definitions.
  Element ad_letter(const Letter& l, const Element& y) const {
    if (is_weight_letter(l)) return ad_K(l.w, y);
    if (is_simple(l)) {
      const int i = rules_.alphabet()[l.sym].side == rw::Side::upper ? roots_[l.sym - roots_.size() - 1].a : roots_[l.sym].a;
      return is_upper(l) ? ad_E(i, y) : ad_F(i, y);
    }
    Element out;
    for (const auto& [w, c] : definition(l)) out.add_scaled(ad(w, y), c);
    return out;
  }

  /// ad(l_1 ... l_k) = ad l_1 o ... o ad l_k.
  Element ad(const Word& u, const Element& y) const {
    Element acc = y;
    for (std::size_t i = u.size(); i-- > 0 && !acc.is_zero();) acc = ad_letter(u[i], acc);
    return acc;
  }

  Element ad(const Element& u, const Element& y) const {
    Element out;
    for (const auto& [w, c] : u) out.add_scaled(ad(w, y), c);
    return out;
  }

  /// sum x_(1) y S(x_(2)), straight from the Hopf structure.
  Element ad_hopf(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [p, c] : coproduct(x)) out.add_scaled(multiply(multiply(Element(p.first), y), antipode(p.second)), c);
    return out;
  }

  // ---- central element machinery ---------------------------------------------------

  /// K_0 = q^{-4 lambda}, K_r = ad(F_r E_r) K_{r-1}. For lambda = w_{n-1} the
  /// chain runs through the nodes in reverse order.
  Element K_element(int r, const Weight& lambda) const {
    const bool reversed = rank_ > 1 && lambda == fundamental(rank_);
    Element k = K(-4 * lambda);
    for (int s = 1; s <= r; ++s) {
      const int node = reversed ? rank_ + 1 - s : s;
      k = ad_F(node, ad_E(node, k));
    }
    return k;
  }

  /// C_lambda = sum_{r=0}^{n-1} (-1)^r [n-r]/[n] K_r.
  Element central_element(const Weight& lambda) const {
    Element c;
    const Scalar qn = q_number(n_);
    for (int r = 0; r < n_; ++r) {
      Scalar coef = q_number(n_ - r) / qn;
      if (r % 2) coef = -coef;
      c.add_scaled(K_element(r, lambda), coef);
    }
    return c;
  }

  /// Generators tested for centrality: E_i, F_i and q^{w_j}.
  std::vector<Element> generators() const {
    std::vector<Element> g;
    for (int i = 1; i <= rank_; ++i) {
      g.push_back(E(i));
      g.push_back(F(i));
      g.push_back(K(fundamental(i)));
    }
    return g;
  }

  bool is_central(const Element& u) const {
    for (const auto& g : generators())
      if (multiply(u, g) != multiply(g, u)) return false;
    return true;
  }

  /// Expansion of a letter in simple generators (free words, not reduced).
  const Element& definition(const Letter& l) const {
    if (is_weight_letter(l)) throw std::logic_error("weight letters have no definition");
    return is_upper(l) ? e_def_[l.sym - roots_.size() - 1] : f_def_[l.sym];
  }

 private:
  /// Index digits of the interval ("12" for [1,2]); bare E/F for sl(2).
  std::string label(const Root& r) const {
    if (n_ == 2) return "";
    std::string s;
    for (int i = r.a; i <= r.b; ++i) s += std::to_string(i);
    return s;
  }

  void build_definitions() {
    const std::size_t m = roots_.size();
    e_def_.assign(m, Element());
    f_def_.assign(m, Element());
    for (std::size_t k = 0; k < m; ++k) {
      const Root r = roots_[k];
      if (r.height() == 1) {
        e_def_[k] = Element(Word{e_letter(k)});
        f_def_[k] = Element(Word{f_letter(k)});
        continue;
      }
      const std::size_t prev = root_index(r.a, r.b - 1);
      const std::size_t last = root_index(r.b, r.b);
      const Element& ep = e_def_[prev];
      const Element& fp = f_def_[prev];
      const Element ed = Element(Word{e_letter(last)});
      const Element fd = Element(Word{f_letter(last)});
      e_def_[k] = concat(ed, ep) - Scalar::q_pow(-1) * concat(ep, ed);
      f_def_[k] = Scalar::q_pow(1) * concat(fp, fd) - concat(fd, fp);
    }
  }

  static Element concat(const Element& a, const Element& b) {
    Element out;
    for (const auto& [u, cu] : a)
      for (const auto& [w, cw] : b) {
        Word x = u;
        x.insert(x.end(), w.begin(), w.end());
        out.add(std::move(x), cu * cw);
      }
    return out;
  }

  Word word2(const Letter& x, const Letter& y) const { return Word{x, y}; }

  void build_block_rules() {
    const std::size_t m = roots_.size();
    const Scalar q = Scalar::q_pow(1), qi = Scalar::q_pow(-1), qd = q - qi;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const int a = roots_[i].a, b = roots_[i].b, c = roots_[j].a, d = roots_[j].b;
        const Letter Ea = e_letter(i), Eb = e_letter(j), Fa = f_letter(i), Fb = f_letter(j);
        Element re, rf;
        if (a == c) {
          re.add(word2(Ea, Eb), q);
          rf.add(word2(Fa, Fb), qi);
        } else if (b + 1 < c || (c <= b && d < b)) {
          re.add(word2(Ea, Eb), Scalar(1));
          rf.add(word2(Fa, Fb), Scalar(1));
        } else if (b + 1 == c) {
          const std::size_t s = root_index(a, d);
          re.add(word2(Ea, Eb), qi);
          re.add(Word{e_letter(s)}, Scalar(1));
          rf.add(word2(Fa, Fb), q);
          rf.add(Word{f_letter(s)}, Scalar(-1));
        } else if (d > b) {
          const std::size_t s = root_index(a, d), t = root_index(c, b);
          re.add(word2(Ea, Eb), Scalar(1));
          re.add(word2(e_letter(s), e_letter(t)), qd);
          rf.add(word2(Fa, Fb), Scalar(1));
          rf.add(word2(f_letter(s), f_letter(t)), -qd);
        } else {
          re.add(word2(Ea, Eb), q);
          rf.add(word2(Fa, Fb), qi);
        }
        rules_.add_rule(word2(Eb, Ea), std::move(re));
        rules_.add_rule(word2(Fb, Fa), std::move(rf));
      }
  }

  void build_cross_rules() {
    const std::size_t m = roots_.size();
    const Scalar inv_qd = (Scalar::q_pow(1) - Scalar::q_pow(-1)).inverse();
    rw::RuleSet simple(rules_.alphabet(), rank_);
    for (std::size_t i = 0; i < m; ++i) {
      if (roots_[i].height() != 1) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (roots_[j].height() != 1) continue;
        Element rhs;
        rhs.add(word2(f_letter(j), e_letter(i)), Scalar(1));
        if (i == j) {
          const Weight h2 = 2 * simple_root(rank_, roots_[i].a);
          rhs.add(Word{rules_.weight_letter(h2)}, inv_qd);
          rhs.add(Word{rules_.weight_letter(-h2)}, -inv_qd);
        }
        simple.add_rule(word2(e_letter(i), f_letter(j)), rhs);
        rules_.add_rule(word2(e_letter(i), f_letter(j)), std::move(rhs));
      }
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (roots_[i].height() == 1 && roots_[j].height() == 1) continue;
        const Element lowered = simple.normal_form(concat(e_def_[i], f_def_[j]));
        rules_.add_rule(word2(e_letter(i), f_letter(j)), rules_.normal_form(lowered));
      }
  }

  /// Normal form of (upper word) * (lower word), memoised.
  Element exchange(const Word& e, const Word& f) const {
    if (e.empty() || f.empty()) {
      Word x = f.empty() ? e : f;
      return Element(x);
    }
    Word key = e;
    key.insert(key.end(), f.begin(), f.end());
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = exchange_cache_.find(key);
      if (it != exchange_cache_.end()) return it->second;
    }
    Element r = rules_.multiply_onto_normal(e, f);
    std::lock_guard<std::mutex> lock(mutex_);
    exchange_cache_.emplace(std::move(key), r);
    return r;
  }

  const TensorElement& coproduct_letter(const Letter& l) const {
    Word key{l};
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = coproduct_cache_.find(key);
      if (it != coproduct_cache_.end()) return it->second;
    }
    TensorElement t;
    if (is_weight_letter(l)) {
      t.add({key, key}, Scalar(1));
    } else if (is_simple(l)) {
      const int i = roots_[is_upper(l) ? l.sym - roots_.size() - 1 : l.sym].a;
      const Word x{l};
      const Word kp{rules_.weight_letter(simple_root(rank_, i))};
      const Word km{rules_.weight_letter(-simple_root(rank_, i))};
      t.add({x, km}, Scalar(1));
      t.add({kp, x}, Scalar(1));
    } else {
      for (const auto& [w, c] : definition(l)) {
        TensorElement acc = tensor(one(), one());
        for (const auto& s : w) acc = multiply(acc, coproduct_letter(s));
        t.add_scaled(acc, c);
      }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return coproduct_cache_.emplace(std::move(key), std::move(t)).first->second;
  }

  const Element& antipode_letter(const Letter& l) const {
    Word key{l};
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = antipode_cache_.find(key);
      if (it != antipode_cache_.end()) return it->second;
    }
    Element s;
    if (is_weight_letter(l)) {
      s = K(-l.w);
    } else if (is_simple(l)) {
      s.add(key, is_upper(l) ? -Scalar::q_pow(-1) : -Scalar::q_pow(1));
    } else {
      for (const auto& [w, c] : definition(l)) {
        Element acc = one();
        for (const auto& x : w) acc = multiply(antipode_letter(x), acc);
        s.add_scaled(acc, c);
      }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return antipode_cache_.emplace(std::move(key), std::move(s)).first->second;
  }

  int n_, rank_;
  std::vector<Root> roots_;
  rw::RuleSet rules_;
  std::vector<Element> e_def_, f_def_;
  std::optional<rw::ConfluenceReport> certificate_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Element, rw::WordHash> exchange_cache_;
  mutable std::unordered_map<Word, TensorElement, rw::WordHash> coproduct_cache_;
  mutable std::unordered_map<Word, Element, rw::WordHash> antipode_cache_;
};

}  // namespace qlie::uq
