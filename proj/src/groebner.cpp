#include "potalg/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "potalg/linalg.hpp"

namespace potalg {

namespace {

struct Rule {
  Word lw;
  Scalar lc;           // leading coefficient of *poly
  const NcPoly* poly;  // primitive integer form (or monic over Z/p)
};

using Acc = std::map<Word, Scalar, MonomialOrder>;

/// Divide a rational-coefficient accumulator by its integer content,
/// folding the divisor into scale.  No-op over Z/p.
void strip_acc_content(Acc& acc, Scalar& scale) {
  if (acc.empty() || !acc.begin()->second.is_rational()) return;
  mpz_class content = 0;
  for (const auto& [w, c] : acc) {
    const mpq_class& q = c.rational_value();
    if (q.get_den() != 1) return;  // mixed input scale; skip stripping
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            q.get_num().get_mpz_t());
    if (content == 1) return;
  }
  Scalar divisor{mpq_class(content)};
  for (auto& [w, c] : acc) c /= divisor;
  scale /= divisor;
}

/// Total reduction, largest word first, first matching rule, leftmost
/// occurrence.  Fraction-free: eliminations cross-multiply by the rule's
/// leading coefficient and strip integer content; the true normal form is
/// recovered from the accumulated scale at the end.
NcPoly reduce_by_rules(const NcPoly& f, const std::vector<Rule>& rules,
                       const MonomialOrder& ord) {
  Acc acc(ord);
  for (const auto& [w, c] : f.terms()) acc.emplace(w, c);
  if (acc.empty()) return NcPoly(f.alphabet_size());
  Scalar scale = Scalar::one(acc.begin()->second.field());

  if (acc.begin()->second.is_rational()) {
    // clear denominators once; all later steps stay integral
    mpz_class lcm_den = 1;
    for (const auto& [w, c] : acc) {
      const mpz_class& den = c.rational_value().get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
      lcm_den = lcm_den / g * den;
    }
    if (lcm_den != 1) {
      Scalar m{mpq_class(lcm_den)};
      for (auto& [w, c] : acc) c *= m;
      scale *= m;
    }
  }

  auto it = acc.end();
  while (it != acc.begin()) {
    --it;
    const Word w = it->first;
    const Rule* match = nullptr;
    size_t pos = 0;
    for (const Rule& r : rules) {
      size_t p = w.letters().find(r.lw.letters());
      if (p != std::string::npos) {
        match = &r;
        pos = p;
        break;
      }
    }
    if (match == nullptr) continue;

    Scalar c = it->second;
    acc.erase(it);
    if (!match->lc.is_one()) {
      for (auto& [kw, kc] : acc) kc *= match->lc;
      scale *= match->lc;
    }
    Word u = w.prefix(int(pos));
    Word v = w.slice(int(pos) + match->lw.degree(),
                     w.degree() - int(pos) - match->lw.degree());
    for (const auto& [tw, tc] : match->poly->terms()) {
      if (tw == match->lw) continue;
      Word prod = u * tw * v;
      Scalar delta = -(c * tc);
      auto [pit, inserted] = acc.emplace(std::move(prod), delta);
      if (!inserted) {
        pit->second += delta;
        if (pit->second.is_zero()) acc.erase(pit);
      }
    }
    strip_acc_content(acc, scale);
    it = acc.lower_bound(w);  // continue just below the eliminated word
  }

  NcPoly out(f.alphabet_size());
  Scalar unscale = scale.reciprocal();
  for (const auto& [w, c] : acc) out.add_term(w, c * unscale);
  return out;
}

/// Primitive integer normalization for rational polynomials (content 1,
/// positive leading coefficient); monic over Z/p.
NcPoly normalize_element(NcPoly f, const MonomialOrder& ord) {
  auto [lw, lc] = leading_term(f, ord);
  if (!lc.is_rational()) return f * lc.reciprocal();
  mpz_class lcm_den = 1;
  for (const auto& [w, c] : f.terms()) {
    const mpz_class& den = c.rational_value().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  mpz_class content = 0;
  for (const auto& [w, c] : f.terms()) {
    const mpq_class& q = c.rational_value();
    mpz_class num = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  if (lc.sign() < 0) content = -content;
  return f * Scalar(mpq_class(lcm_den, content));
}

/// Canonical comparison on polynomials (termwise, structural word order);
/// makes completion independent of the input ordering.
bool poly_canonical_less(const NcPoly& a, const NcPoly& b) {
  auto ita = a.terms().begin(), itb = b.terms().begin();
  WordKeyLess wl;
  for (; ita != a.terms().end() && itb != b.terms().end(); ++ita, ++itb) {
    if (ita->first != itb->first) return wl(ita->first, itb->first);
    if (ita->second != itb->second)
      return ita->second.str() < itb->second.str();
  }
  return a.terms().size() < b.terms().size();
}

struct Entry {
  NcPoly poly;  // primitive integer form (monic over Z/p)
  Word lw;
  Scalar lc;
  bool active = true;
};

struct AmbKey {
  Word ambiguity;
  size_t left, right;
  int overlap;

  bool operator<(const AmbKey& o) const {
    WordKeyLess wl;
    if (ambiguity != o.ambiguity) return wl(ambiguity, o.ambiguity);
    if (left != o.left) return left < o.left;
    if (right != o.right) return right < o.right;
    return overlap < o.overlap;
  }
};

/// Proper overlaps: a suffix of `u` equal to a prefix of `v`, the overlap
/// shorter than both words.
std::vector<AmbKey> overlaps(const Word& u, const Word& v, size_t i,
                             size_t j) {
  std::vector<AmbKey> out;
  int top = std::min(u.degree(), v.degree()) - 1;
  for (int o = 1; o <= top; ++o) {
    if (u.suffix(o).letters() != v.prefix(o).letters()) continue;
    Word amb = u * v.slice(o, v.degree() - o);
    out.push_back(AmbKey{std::move(amb), i, j, o});
  }
  return out;
}

class Completion {
 public:
  Completion(std::vector<NcPoly> relations, MonomialOrder ord, int bound)
      : ord_(std::move(ord)), bound_(bound) {
    if (relations.empty()) throw DomainError("no relations given");
    for (const NcPoly& r : relations) {
      if (r.is_zero()) throw DomainError("zero relation");
      if (!r.is_homogeneous()) all_homogeneous_ = false;
      if (r.degree() > bound_)
        throw DomainError("degree bound below a relation degree");
    }
    std::sort(relations.begin(), relations.end(), poly_canonical_less);
    for (NcPoly& r : relations) worklist_.push_back(std::move(r));
  }

  struct Result {
    std::vector<NcPoly> elements;
    std::vector<OverlapSite> unresolved;
    long processed = 0;
    bool homogeneous = true;
  };

  Result run() {
    while (!worklist_.empty() || !queue_.empty()) {
      if (!worklist_.empty()) {
        NcPoly f = std::move(worklist_.front());
        worklist_.pop_front();
        incorporate(std::move(f));
        continue;
      }
      AmbKey amb = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!entries_[amb.left].active || !entries_[amb.right].active) continue;
      ++processed_;
      NcPoly r = reduce(s_polynomial(amb));
      if (!r.is_zero()) worklist_.push_back(std::move(r));
    }

    Result res;
    res.elements = interreduced_elements();
    res.unresolved = unresolved_above_bound(res.elements);
    res.processed = processed_;
    res.homogeneous = all_homogeneous_;
    return res;
  }

 private:
  std::vector<Rule> active_rules() const {
    std::vector<Rule> rules;
    for (const Entry& e : entries_)
      if (e.active) rules.push_back(Rule{e.lw, e.lc, &e.poly});
    return rules;
  }

  NcPoly reduce(const NcPoly& f) const {
    return reduce_by_rules(f, active_rules(), ord_);
  }

  void incorporate(NcPoly f) {
    NcPoly r = reduce(f);
    if (r.is_zero()) return;
    r = normalize_element(std::move(r), ord_);
    auto [lw, lc] = leading_term(r, ord_);

    // retire entries whose leading word the new one divides
    for (Entry& e : entries_) {
      if (!e.active) continue;
      if (e.lw.contains_factor(lw)) {
        e.active = false;
        worklist_.push_back(std::move(e.poly));
      }
    }

    size_t idx = entries_.size();
    entries_.push_back(Entry{std::move(r), lw, lc, true});
    for (size_t k = 0; k < entries_.size(); ++k) {
      if (!entries_[k].active) continue;
      enqueue(overlaps(entries_[k].lw, lw, k, idx));
      if (k != idx) enqueue(overlaps(lw, entries_[k].lw, idx, k));
    }
  }

  void enqueue(std::vector<AmbKey> keys) {
    for (AmbKey& k : keys)
      if (k.ambiguity.degree() <= bound_) queue_.insert(std::move(k));
  }

  NcPoly s_polynomial(const AmbKey& amb) const {
    const Entry& gi = entries_[amb.left];
    const Entry& gj = entries_[amb.right];
    Word b = gj.lw.slice(amb.overlap, gj.lw.degree() - amb.overlap);
    Word a = gi.lw.prefix(gi.lw.degree() - amb.overlap);
    return gj.lc * sandwich(Word(), gi.poly, b) -
           gi.lc * sandwich(a, gj.poly, Word());
  }

  std::vector<NcPoly> interreduced_elements() const {
    std::vector<const Entry*> active;
    for (const Entry& e : entries_)
      if (e.active) active.push_back(&e);
    std::sort(active.begin(), active.end(),
              [this](const Entry* a, const Entry* b) {
                return ord_.less(a->lw, b->lw);
              });
    // leading words are pairwise factor-free, so one tail-reduction pass
    // against the others is a fixed point
    std::vector<NcPoly> out;
    out.reserve(active.size());
    for (size_t i = 0; i < active.size(); ++i) {
      std::vector<Rule> others;
      for (size_t j = 0; j < active.size(); ++j)
        if (j != i)
          others.push_back(Rule{active[j]->lw, active[j]->lc, &active[j]->poly});
      NcPoly r = reduce_by_rules(active[i]->poly, others, ord_);
      auto [lw, lc] = leading_term(r, ord_);
      r *= lc.reciprocal();
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<OverlapSite> unresolved_above_bound(
      const std::vector<NcPoly>& elements) const {
    std::set<AmbKey> sites;
    for (size_t i = 0; i < elements.size(); ++i) {
      Word u = leading_term(elements[i], ord_).first;
      for (size_t j = 0; j < elements.size(); ++j) {
        Word v = leading_term(elements[j], ord_).first;
        for (AmbKey& k : overlaps(u, v, i, j))
          if (k.ambiguity.degree() > bound_) sites.insert(std::move(k));
      }
    }
    std::vector<OverlapSite> out;
    for (const AmbKey& k : sites)
      out.push_back(OverlapSite{k.left, k.right, k.ambiguity});
    return out;
  }

  MonomialOrder ord_;
  int bound_;
  bool all_homogeneous_ = true;
  std::vector<Entry> entries_;
  std::deque<NcPoly> worklist_;
  std::set<AmbKey> queue_;
  long processed_ = 0;
};

}  // namespace

std::string certificate_name(GBCertificate c) {
  switch (c) {
    case GBCertificate::CompleteUpToBound: return "CompleteUpToBound";
    case GBCertificate::CompleteGraded: return "CompleteGraded";
    case GBCertificate::Saturated: return "Saturated";
  }
  return "?";
}

std::vector<Word> TruncatedGB::leading_words() const {
  std::vector<Word> out;
  out.reserve(elements_.size());
  for (const NcPoly& e : elements_)
    out.push_back(leading_term(e, order_).first);
  return out;
}

bool TruncatedGB::covers_degree(int d) const {
  return certificate_ == GBCertificate::Saturated || d <= bound_;
}

bool TruncatedGB::graded_certified(int d) const {
  if (certificate_ == GBCertificate::Saturated) return true;
  return certificate_ == GBCertificate::CompleteGraded && d <= bound_;
}

std::string TruncatedGB::serialize() const {
  std::string out = "order=" + order_.description() +
                    " bound=" + std::to_string(bound_) +
                    " certificate=" + certificate_name(certificate_) + "\n";
  for (const NcPoly& e : elements_) out += to_text(e, order_) + "\n";
  return out;
}

TruncatedGB complete(std::vector<NcPoly> relations, MonomialOrder ord,
                     int bound) {
  Completion::Result res =
      Completion(std::move(relations), ord, bound).run();
  TruncatedGB gb(std::move(ord), bound);
  gb.elements_ = std::move(res.elements);
  gb.unresolved_ = std::move(res.unresolved);
  gb.overlaps_processed_ = res.processed;
  if (gb.unresolved_.empty())
    gb.certificate_ = GBCertificate::Saturated;
  else
    gb.certificate_ = res.homogeneous ? GBCertificate::CompleteGraded
                                      : GBCertificate::CompleteUpToBound;
  return gb;
}

NcPoly normal_form(const NcPoly& f, const TruncatedGB& g) {
  if (!g.covers_degree(f.degree()))
    throw StalenessError("input degree " + std::to_string(f.degree()) +
                         " beyond basis certificate (bound " +
                         std::to_string(g.degree_bound()) + ")");
  std::vector<Rule> rules;
  rules.reserve(g.elements().size());
  for (const NcPoly& e : g.elements()) {
    auto [lw, lc] = leading_term(e, g.order());
    rules.push_back(Rule{lw, lc, &e});
  }
  return reduce_by_rules(f, rules, g.order());
}

NcPoly normal_form_randomized(const NcPoly& f, const TruncatedGB& g,
                              std::mt19937_64& rng) {
  if (!g.covers_degree(f.degree()))
    throw StalenessError("input degree beyond basis certificate");
  std::vector<std::pair<Word, const NcPoly*>> rules;
  for (const NcPoly& e : g.elements())
    rules.emplace_back(leading_term(e, g.order()).first, &e);

  NcPoly cur = f;
  while (true) {
    struct Site {
      Word word;
      Scalar coeff;
      size_t rule;
      int pos;
    };
    std::vector<Site> sites;
    for (const auto& [w, c] : cur.terms()) {
      for (size_t r = 0; r < rules.size(); ++r) {
        const std::string& needle = rules[r].first.letters();
        size_t p = w.letters().find(needle);
        while (p != std::string::npos) {
          sites.push_back(Site{w, c, r, int(p)});
          p = w.letters().find(needle, p + 1);
        }
      }
    }
    if (sites.empty()) return cur;
    const Site& s =
        sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
    const Word& lw = rules[s.rule].first;
    Word u = s.word.prefix(s.pos);
    Word v = s.word.slice(s.pos + lw.degree(),
                          s.word.degree() - s.pos - lw.degree());
    cur -= s.coeff * sandwich(u, *rules[s.rule].second, v);
  }
}

std::vector<mpz_class> normal_word_census(
    const std::vector<Word>& leading_words, int max_degree, int alphabet) {
  return FactorAvoidanceAutomaton(leading_words, alphabet).census(max_degree);
}

long long DimReport::sum() const {
  long long s = 0;
  for (long long v : per_degree) s += v;
  return s;
}

std::string DimReport::method_name(Method m) {
  switch (m) {
    case Method::NormalWords: return "NormalWords";
    case Method::BruteForceOracle: return "BruteForceOracle";
    case Method::TruncatedQuotient: return "TruncatedQuotient";
  }
  return "?";
}

namespace {

long long mpz_to_ll(const mpz_class& v) {
  if (!v.fits_slong_p()) throw DomainError("dimension exceeds 64-bit range");
  return v.get_si();
}

}  // namespace

DimReport graded_dims(const TruncatedGB& gb, int max_degree) {
  if (!gb.graded_certified(max_degree))
    throw StalenessError(
        "basis does not certify graded dimensions to degree " +
        std::to_string(max_degree));
  int alphabet = gb.elements().empty()
                     ? gb.order().alphabet_size()
                     : gb.elements().front().alphabet_size();
  FactorAvoidanceAutomaton automaton(gb.leading_words(), alphabet);
  DimReport report;
  report.method = DimReport::Method::NormalWords;
  for (const mpz_class& v : automaton.census(max_degree))
    report.per_degree.push_back(mpz_to_ll(v));
  if (gb.certificate() == GBCertificate::Saturated &&
      !automaton.language_is_finite())
    report.total = std::nullopt;
  else
    report.total = report.sum();
  return report;
}

DimReport quotient_dim(const TruncatedGB& gb) {
  if (gb.certificate() != GBCertificate::Saturated)
    throw StalenessError("total dimension needs a Saturated basis");
  int alphabet = gb.elements().empty()
                     ? gb.order().alphabet_size()
                     : gb.elements().front().alphabet_size();
  FactorAvoidanceAutomaton automaton(gb.leading_words(), alphabet);
  DimReport report;
  report.method = DimReport::Method::NormalWords;
  for (const mpz_class& v : automaton.census(automaton.state_count()))
    report.per_degree.push_back(mpz_to_ll(v));
  if (automaton.language_is_finite())
    report.total = mpz_to_ll(*automaton.total_count());
  else
    report.total = std::nullopt;
  return report;
}

DimReport graded_dim_oracle(const std::vector<NcPoly>& relations,
                            int max_degree, const MonomialOrder& ord) {
  int alphabet = relations.empty() ? 2 : relations.front().alphabet_size();
  for (const NcPoly& r : relations) {
    if (r.is_zero()) throw DomainError("zero relation");
    if (!r.is_homogeneous())
      throw DomainError("oracle requires homogeneous relations");
  }
  DimReport report;
  report.method = DimReport::Method::BruteForceOracle;
  for (int d = 0; d <= max_degree; ++d) {
    WordSpanEliminator elim(ord);
    for (const NcPoly& g : relations) {
      int e = g.degree();
      if (e > d) continue;
      for (int a = 0; a + e <= d; ++a) {
        for (const Word& u : all_words(a, alphabet))
          for (const Word& v : all_words(d - e - a, alphabet))
            elim.add(sandwich(u, g, v));
      }
    }
    long long free_dim = 1;
    for (int i = 0; i < d; ++i) free_dim *= alphabet;
    report.per_degree.push_back(free_dim - elim.rank());
  }
  report.total = report.sum();
  return report;
}

namespace {

// The truncated two-sided span of the relations: seed with the relations and
// close the triangularized span under the four maps v -> letter*v, v -> v*letter
// followed by truncation.  Each new pivot is expanded exactly once; the span
// equals span{ truncate(u*g*v) } because every sandwich product arises from
// repeated one-letter multiplications of span elements.
WordSpanEliminator truncation_eliminator(const Potential& F, int n) {
  WordSpanEliminator elim(MonomialOrder::deglex());
  std::deque<Word> fresh;
  auto feed = [&](const NcPoly& row) {
    NcPoly t = row.truncate_below(n);
    if (t.is_zero()) return;
    if (std::optional<Word> pivot = elim.add(t))
      fresh.push_back(std::move(*pivot));
  };
  for (const NcPoly& g : F.relations()) feed(g);
  while (!fresh.empty()) {
    Word w = fresh.front();
    fresh.pop_front();
    const WordSpanEliminator::Row* vec = elim.rule(w);
    if (vec == nullptr) continue;
    NcPoly v(2);
    for (const auto& [tw, tc] : *vec) v.add_term(tw, tc);
    for (int letter = 0; letter < 2; ++letter) {
      feed(sandwich(Word::single(letter), v, Word()));
      feed(sandwich(Word(), v, Word::single(letter)));
    }
  }
  return elim;
}

DimReport truncation_report(const WordSpanEliminator& elim, int n) {
  DimReport report;
  report.method = DimReport::Method::TruncatedQuotient;
  std::vector<long long> non_pivots(size_t(n), 0);
  long long pow = 1;
  for (int d = 0; d < n; ++d) {
    non_pivots[size_t(d)] = pow;
    pow *= 2;
  }
  for (const Word& w : elim.pivots()) --non_pivots[size_t(w.degree())];
  report.per_degree = std::move(non_pivots);
  report.total = report.sum();
  return report;
}

}  // namespace

DimReport truncated_quotient_dim(const Potential& F, int n) {
  if (F.body().is_zero()) throw DomainError("zero potential");
  if (n < F.valuation())
    throw DomainError("truncation degree below the potential valuation");
  WordSpanEliminator elim = truncation_eliminator(F, n);
  return truncation_report(elim, n);
}

DimReport completion_dim_probe(const Potential& F, int max_n, int window) {
  if (F.body().is_zero()) throw DomainError("zero potential");
  if (window < 1) throw DomainError("window must be positive");
  if (max_n < F.valuation() + window)
    throw DomainError("max_n must reach valuation + window");

  DimReport report;
  report.method = DimReport::Method::TruncatedQuotient;
  std::vector<long long> dims;
  std::vector<Word> last_pivots;
  for (int n = 1; n <= max_n; ++n) {
    WordSpanEliminator elim = truncation_eliminator(F, n);
    dims.push_back(truncation_report(elim, n).sum());
    if (n == max_n) last_pivots = elim.pivots();
  }
  report.per_degree = dims;

  bool flat = true;
  for (int i = 1; i < window; ++i)
    if (dims[dims.size() - 1 - size_t(i)] != dims.back()) flat = false;
  bool cofinite =
      FactorAvoidanceAutomaton(last_pivots, 2).language_is_finite();
  if (flat && cofinite) {
    report.total = dims.back();
    report.verdict = "Stabilized(" + std::to_string(dims.back()) + ")";
  } else {
    report.total = std::nullopt;
    report.verdict = "Inconclusive";
  }
  return report;
}

}  // namespace potalg
