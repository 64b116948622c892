#include "eisenpole/poles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "eisenpole/parallel.hpp"

namespace eisenpole {

std::vector<Rat> potential_poles(const RootDatum& d, int parabolic) {
  AffineWeight chi = chi_family(d, parabolic, Convention::PlusHalf);
  std::set<Rat> out;
  for (int k = 0; k < d.num_positive(); ++k) {
    if (d.positive_roots()[k][parabolic] == 0) continue;  // Levi root: constant pairing
    AffLin l = pair_family(d, chi, d.positive_coroots()[k]);
    if (l.slope == 0) continue;
    for (const Rat& target : {Rat(0), Rat(1)}) {
      Rat s = (target - l.offset) / l.slope;
      if (s > 0) out.insert(s);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<EquivalenceClass> equivalence_classes(const RootDatum& d, int parabolic,
                                                  const Rat& s0) {
  Weight chi = chi_family(d, parabolic, Convention::PlusHalf).at(s0);
  auto reps = d.coset_representatives(d.levi_of(parabolic));
  std::map<Weight, EquivalenceClass> classes;
  for (const auto& w : reps) {
    Weight img = d.apply(w, chi);
    auto [it, fresh] = classes.try_emplace(img);
    if (fresh) {
      it->second.s0 = s0;
      it->second.representative = w;  // reps arrive (length, word)-sorted
      it->second.image = img;
      it->second.exponent = d.weight_to_root(img);
    }
    it->second.members.push_back(w);
  }
  std::vector<EquivalenceClass> out;
  for (auto& [img, cls] : classes) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
    return a.exponent > b.exponent;
  });
  return out;
}

namespace {

using ArgMultiset = std::map<AffLin, int>;

ArgMultiset multiset_of(const std::vector<AffLin>& v) {
  ArgMultiset m;
  for (const auto& a : v) ++m[a];
  return m;
}

int pole_count_at(const ArgMultiset& numerator, const Rat& s0) {
  int c = 0;
  for (const auto& [arg, mult] : numerator) {
    Rat v = arg.at(s0);
    if (v == 0 || v == 1) c += mult;
  }
  return c;
}

LaurentPoly expand_term(const ArgMultiset& numerator, const Rat& s0, int target_trunc) {
  int m = pole_count_at(numerator, s0);
  if (m == 0) {
    // pole-free product: a single constant monomial in the zeta atoms
    SymPoly c(Rat(1));
    for (const auto& [arg, mult] : numerator)
      for (int k = 0; k < mult; ++k) c = c * zeta_expand(arg, s0, 0).coeff(0);
    LaurentPoly out;
    out.s0 = s0;
    out.trunc = target_trunc;
    out.set(0, c);
    return out;
  }
  LaurentPoly prod = laurent_one(s0, target_trunc + m);
  for (const auto& [arg, mult] : numerator)
    for (int k = 0; k < mult; ++k) prod = mul(prod, zeta_expand(arg, s0, target_trunc + m));
  return prod;
}

}  // namespace

namespace {

// Pole order and leading monomial of a bare product of zeta factors; the
// leading coefficient of a product is a monomial and cannot vanish in the
// free coefficient ring.
std::pair<int, SymPoly> product_order(const ArgMultiset& args, const Rat& s0) {
  int m = 0;
  SymPoly lead(Rat(1));
  for (const auto& [arg, mult] : args)
    for (int k = 0; k < mult; ++k) {
      LaurentPoly f = zeta_expand(arg, s0, 0);
      int e = f.min_exp();
      if (e < 0) ++m;
      lead = lead * f.coeff(e);
    }
  return {m, lead};
}

// N^# factors as (common part) x (sum of small residual products); orders
// add and leading coefficients multiply exactly, which keeps the expansion
// work proportional to how much the class members actually differ.
ClassOrder class_order_cached(const std::vector<ArgMultiset>& member_nums,
                              const std::vector<ArgMultiset>& member_dens, const Rat& s0,
                              const ZetaNumeric* num, const PipelineOptions& opt) {
  ArgMultiset common_den;
  for (const auto& den : member_dens)
    for (const auto& [arg, mult] : den) common_den[arg] = std::max(common_den[arg], mult);
  ClassOrder out;
  std::vector<ArgMultiset> terms = member_nums;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (const auto& [arg, mult] : common_den) {
      auto it = member_dens[i].find(arg);
      int have = it == member_dens[i].end() ? 0 : it->second;
      if (mult > have) terms[i][arg] += mult - have;
    }
    out.max_individual_order = std::max(out.max_individual_order, pole_count_at(terms[i], s0));
  }

  ArgMultiset common = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) {
    for (auto it = common.begin(); it != common.end();) {
      auto jt = terms[i].find(it->first);
      int mult = jt == terms[i].end() ? 0 : jt->second;
      it->second = std::min(it->second, mult);
      it = it->second == 0 ? common.erase(it) : std::next(it);
    }
  }
  std::vector<ArgMultiset> residuals = terms;
  for (auto& r : residuals)
    for (const auto& [arg, mult] : common) {
      r[arg] -= mult;
      if (r[arg] == 0) r.erase(arg);
    }

  auto [m_common, lead_common] = product_order(common, s0);
  int m_res = 0;
  for (const auto& r : residuals) m_res = std::max(m_res, pole_count_at(r, s0));

  int target = opt.depth;
  for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
    LaurentPoly total;
    total.s0 = s0;
    total.trunc = target;
    for (const auto& r : residuals) total = add(total, expand_term(r, s0, target));
    PoleOrder res = pole_order(total, num);
    out.retries = attempt;
    if (res.conclusive) {
      out.pole = res;
      out.pole.order = res.order + m_common;
      out.pole.leading = lead_common * res.leading;
      for (const SymbolAtom& a : lead_common.atoms())
        if (a.kind == SymbolAtom::kZ && a.a < 1) out.pole.conditional_zeta_args.push_back(a.a);
      std::sort(out.pole.conditional_zeta_args.begin(), out.pole.conditional_zeta_args.end());
      out.pole.conditional_zeta_args.erase(std::unique(out.pole.conditional_zeta_args.begin(),
                                                       out.pole.conditional_zeta_args.end()),
                                           out.pole.conditional_zeta_args.end());
      return out;
    }
    target *= 2;
  }
  out.pole.conclusive = false;
  return out;  // inconclusive after retries; flagged by the caller
}
}  // namespace

ClassOrder class_order(const RootDatum& d, int parabolic, const EquivalenceClass& cls,
                       const ZetaNumeric* num, const PipelineOptions& opt) {
  AffineWeight chi = chi_family(d, parabolic, Convention::PlusHalf);
  std::vector<ArgMultiset> nums, dens;
  for (const auto& w : cls.members) {
    CFactor c = c_factor(d, w, chi);
    nums.push_back(multiset_of(c.reduced.numerator()));
    dens.push_back(multiset_of(c.reduced.denominator()));
  }
  return class_order_cached(nums, dens, cls.s0, num, opt);
}

bool square_integrable(const RootDatum& d, const EquivalenceClass& cls) {
  for (const Rat& c : cls.exponent)
    if (c >= 0) return false;
  return true;
}

std::optional<std::string> orbit_label(const RootDatum& d, int parabolic, const Rat& s0) {
  Weight chi = chi_family(d, parabolic, Convention::MinusHalf).at(s0);
  Weight dom = d.dominant_representative(chi).first;
  return match_orbit(d, Rat(2) * dom);
}

bool PoleReport::any_inconclusive() const {
  for (const auto& e : entries)
    if (e.inconclusive) return true;
  return false;
}

namespace {

// One reduced C-factor per coset, shared by every potential pole.
struct CosetData {
  std::vector<WeylWord> reps;
  std::vector<ArgMultiset> nums, dens;
};

CosetData coset_data(const RootDatum& d, int parabolic, int threads) {
  CosetData cd;
  cd.reps = d.coset_representatives(d.levi_of(parabolic));
  cd.nums.resize(cd.reps.size());
  cd.dens.resize(cd.reps.size());
  AffineWeight chi = chi_family(d, parabolic, Convention::PlusHalf);
  parallel_for(cd.reps.size(), threads, [&](std::size_t k) {
    CFactor c = c_factor(d, cd.reps[k], chi);
    cd.nums[k] = multiset_of(c.reduced.numerator());
    cd.dens[k] = multiset_of(c.reduced.denominator());
  });
  return cd;
}

}  // namespace

PoleReport pole_report(const RootDatum& d, int parabolic, const PipelineOptions& opt) {
  PoleReport rep;
  rep.group = d.type().str();
  rep.parabolic = parabolic;
  auto points = potential_poles(d, parabolic);
  rep.entries.resize(points.size());

  CosetData cd = coset_data(d, parabolic, opt.threads);
  rep.cosets = static_cast<int>(cd.reps.size());

  // the assumption check is shared by every point
  rep.denominator_ok = true;
  for (const auto& den : cd.dens)
    for (const auto& [q, mult] : den)
      for (const Rat& s0 : points)
        if (q.at(s0) <= 1) rep.denominator_ok = false;

  ZetaNumeric num(opt.digits);
  AffineWeight chi = chi_family(d, parabolic, Convention::PlusHalf);

  // flatten (point, class) pairs for an even parallel workload
  struct Job {
    std::size_t point;
    std::size_t cls;
  };
  std::vector<std::vector<EquivalenceClass>> classes_at(points.size());
  std::vector<std::vector<std::vector<int>>> member_ids(points.size());
  std::vector<Job> jobs;
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    Weight chi0 = chi.at(points[pi]);
    std::map<Weight, int> index;
    for (std::size_t k = 0; k < cd.reps.size(); ++k) {
      Weight img = d.apply(cd.reps[k], chi0);
      auto [it, fresh] = index.try_emplace(img, static_cast<int>(classes_at[pi].size()));
      if (fresh) {
        EquivalenceClass cls;
        cls.s0 = points[pi];
        cls.representative = cd.reps[k];
        cls.image = img;
        cls.exponent = d.weight_to_root(img);
        classes_at[pi].push_back(std::move(cls));
        member_ids[pi].push_back({});
      }
      classes_at[pi][it->second].members.push_back(cd.reps[k]);
      member_ids[pi][it->second].push_back(static_cast<int>(k));
    }
    for (std::size_t ci = 0; ci < classes_at[pi].size(); ++ci) jobs.push_back({pi, ci});
  }
  std::vector<std::vector<PoleEntry::ClassDetail>> details(points.size());
  for (std::size_t pi = 0; pi < points.size(); ++pi)
    details[pi].resize(classes_at[pi].size());
  parallel_for(jobs.size(), opt.threads, [&](std::size_t k) {
    auto [pi, ci] = jobs[k];
    PoleEntry::ClassDetail det;
    det.cls = classes_at[pi][ci];
    std::vector<ArgMultiset> nums, dens;
    for (int id : member_ids[pi][ci]) {
      nums.push_back(cd.nums[id]);
      dens.push_back(cd.dens[id]);
    }
    det.ord = class_order_cached(nums, dens, points[pi], &num, opt);
    det.square_int = square_integrable(d, det.cls);
    details[pi][ci] = std::move(det);
  });

  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const Rat& s0 = points[pi];
    PoleEntry e;
    e.s0 = s0;
    e.d_p = d_P(d, parabolic, s0);
    e.classes = std::move(details[pi]);
    std::sort(e.classes.begin(), e.classes.end(),
              [](const PoleEntry::ClassDetail& a, const PoleEntry::ClassDetail& b) {
                if (a.ord.pole.order != b.ord.pole.order)
                  return a.ord.pole.order > b.ord.pole.order;
                return a.cls.exponent > b.cls.exponent;
              });
    int best = 0;
    for (const auto& det : e.classes) {
      if (!det.ord.pole.conclusive) {
        e.inconclusive = true;
        continue;
      }
      best = std::max(best, det.ord.pole.order);
    }
    e.order = best;
    e.square_int = best >= 1;
    e.order_certified = best >= 1;
    for (const auto& det : e.classes) {
      if (!det.ord.pole.conclusive || det.ord.pole.order != best) continue;
      if (!det.square_int) e.square_int = false;
      if (det.ord.pole.cert != PoleOrder::kMonomialNonzero &&
          det.ord.pole.cert != PoleOrder::kNumericNonzero)
        e.order_certified = false;
      for (const Rat& a : det.ord.pole.conditional_zeta_args) e.assumptions.push_back(a);
    }
    std::sort(e.assumptions.begin(), e.assumptions.end());
    e.assumptions.erase(std::unique(e.assumptions.begin(), e.assumptions.end()),
                        e.assumptions.end());
    if (e.order >= 1 && e.square_int) e.orbit = orbit_label(d, parabolic, s0);
    rep.entries[pi] = std::move(e);
  }
  return rep;
}

std::string PoleReport::to_json() const {
  std::ostringstream os;
  os << "{\"schema_version\":\"1\",\"report\":\"poles\",\"group\":\"" << group
     << "\",\"parabolic\":" << parabolic + 1
     << ",\"section\":\"spherical\",\"cosets\":" << cosets << ",\"denominator_assumption_ok\":"
     << (denominator_ok ? "true" : "false") << ",\"entries\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (i) os << ",";
    os << "{\"s0\":\"" << rat_str(e.s0) << "\",\"pole_order\":" << e.order
       << ",\"d_P\":" << e.d_p << ",\"order_certified\":" << (e.order_certified ? "true" : "false")
       << ",\"square_integrable\":" << (e.square_int ? "true" : "false");
    os << ",\"orbit\":" << (e.orbit ? "\"" + *e.orbit + "\"" : "null");
    os << ",\"inconclusive\":" << (e.inconclusive ? "true" : "false");
    os << ",\"assumptions\":[";
    for (std::size_t k = 0; k < e.assumptions.size(); ++k) {
      if (k) os << ",";
      os << "\"zeta(" << rat_str(e.assumptions[k]) << ") != 0\"";
    }
    os << "],\"classes\":[";
    for (std::size_t k = 0; k < e.classes.size(); ++k) {
      const auto& det = e.classes[k];
      if (k) os << ",";
      os << "{\"exponent\":[";
      for (std::size_t j = 0; j < det.cls.exponent.size(); ++j) {
        if (j) os << ",";
        os << "\"" << rat_str(det.cls.exponent[j]) << "\"";
      }
      os << "],\"size\":" << det.cls.members.size() << ",\"representative\":\""
         << word_str(det.cls.representative) << "\",\"max_individual_order\":"
         << det.ord.max_individual_order;
      if (det.ord.pole.conclusive) {
        os << ",\"order\":" << det.ord.pole.order << ",\"leading\":\""
           << det.ord.pole.leading.str() << "\"";
      } else {
        os << ",\"order\":null,\"leading\":null";
      }
      os << ",\"square_integrable\":" << (det.square_int ? "true" : "false") << "}";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

std::string PoleReport::to_latex() const {
  std::ostringstream os;
  os << "\\begin{tabular}{|c|";
  for (std::size_t i = 0; i < entries.size(); ++i) os << "c|";
  os << "} \\hline\n$\\para{P}_{ " << parabolic + 1 << " }$";
  for (const auto& e : entries) os << " & $" << rat_latex(e.s0) << "$";
  os << " \\\\ \\hline\nPole order";
  for (const auto& e : entries) os << " & $" << e.order << "$";
  os << " \\\\ \\hline\n$L_2$";
  for (const auto& e : entries) os << " & " << (e.order >= 1 && e.square_int ? "\\ding{51}" : "\\ding{55}");
  os << " \\\\ \\hline\nOrbit";
  for (const auto& e : entries) {
    os << " & ";
    if (e.orbit) {
      std::string lbl = *e.orbit;
      auto paren = lbl.find('(');
      std::string head = paren == std::string::npos ? lbl : lbl.substr(0, paren);
      os << "$" << head.substr(0, 1) << "_" << head.substr(1);
      if (paren != std::string::npos)
        os << "(a_" << lbl.substr(paren + 2, lbl.size() - paren - 3) << ")";
      os << "$";
    }
  }
  os << " \\\\ \\hline\n\\end{tabular}\n";
  return os.str();
}

std::string PoleReport::to_text() const {
  std::ostringstream os;
  os << "Poles of the spherical Eisenstein series, " << group << ", P" << parabolic + 1
     << " (leading-term orders; spherical section only)\n";
  for (const auto& e : entries) {
    os << "  s0 = " << rat_str(e.s0) << ": order " << e.order;
    os << (e.order >= 1 ? (e.square_int ? ", L2" : ", not L2") : "");
    if (e.orbit) os << ", orbit " << *e.orbit;
    os << ", d_P = " << e.d_p;
    if (!e.order_certified && e.order >= 1) os << " [order <= d_P bound only]";
    if (e.inconclusive) os << " [inconclusive classes]";
    if (!e.assumptions.empty()) {
      os << " [assumes";
      for (const auto& a : e.assumptions) os << " zeta(" << rat_str(a) << ")!=0";
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

AppendixDoc emit_appendix_proof(const RootDatum& d, int parabolic, const Rat& s0,
                                const PipelineOptions& opt) {
  AppendixDoc doc;
  doc.group = d.type().str();
  doc.parabolic = parabolic;
  doc.s0 = s0;

  AffineWeight chi = chi_family(d, parabolic, Convention::PlusHalf);
  auto classes = equivalence_classes(d, parabolic, s0);
  ZetaNumeric num(opt.digits);

  std::vector<std::pair<int, bool>> class_orders(classes.size());
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const auto& cls = classes[ci];
    ClassOrder co = class_order(d, parabolic, cls, &num, opt);
    class_orders[ci] = {co.pole.conclusive ? co.pole.order : co.max_individual_order,
                        co.pole.conclusive};
    for (const auto& w : cls.members) {
      CFactor cf = c_factor(d, w, chi);
      ArgMultiset nm = multiset_of(cf.reduced.numerator());
      doc.rows.push_back({pole_count_at(nm, s0), w, cf.reduced, cls.exponent});
    }
    if (cls.members.size() > 1 && co.max_individual_order >= 1) {
      AppendixDoc::ClassProof pf;
      pf.exponent = cls.exponent;
      pf.max_individual_order = co.max_individual_order;
      pf.order = co.pole.conclusive ? co.pole.order : -1;
      // rebuild numerators over the common denominator
      std::vector<ArgMultiset> nums, dens;
      ArgMultiset common;
      for (const auto& w : cls.members) {
        CFactor cf = c_factor(d, w, chi);
        nums.push_back(multiset_of(cf.reduced.numerator()));
        dens.push_back(multiset_of(cf.reduced.denominator()));
        for (const auto& [arg, mult] : dens.back()) common[arg] = std::max(common[arg], mult);
      }
      auto y_index = [&](const AffLin& a) {
        for (std::size_t k = 0; k < pf.y.size(); ++k)
          if (pf.y[k] == a) return static_cast<int>(k);
        pf.y.push_back(a);
        return static_cast<int>(pf.y.size() - 1);
      };
      for (std::size_t i = 0; i < nums.size(); ++i) {
        ArgMultiset term = nums[i];
        for (const auto& [arg, mult] : common) {
          int have = dens[i].count(arg) ? dens[i][arg] : 0;
          if (mult > have) term[arg] += mult - have;
        }
        std::vector<int> idx;
        for (const auto& [arg, mult] : term)
          for (int k = 0; k < mult; ++k) idx.push_back(y_index(arg));
        pf.numerators.push_back(idx);
        pf.summands.push_back(expand_term(term, s0, 1));
      }
      for (const auto& [arg, mult] : common)
        for (int k = 0; k < mult; ++k) pf.denominator.push_back(y_index(arg));
      LaurentPoly total;
      total.s0 = s0;
      total.trunc = 1;
      for (const auto& s : pf.summands) total = add(total, s);
      pf.total = total;
      doc.proofs.push_back(std::move(pf));
    }
  }
  int best = 0;
  bool si = true;
  for (std::size_t ci = 0; ci < classes.size(); ++ci)
    best = std::max(best, class_orders[ci].first);
  for (std::size_t ci = 0; ci < classes.size(); ++ci)
    if (class_orders[ci].first == best && !square_integrable(d, classes[ci])) si = false;
  doc.order = best;
  doc.square_int = best >= 1 && si;
  std::sort(doc.rows.begin(), doc.rows.end(), [](const AppendixDoc::Row& a,
                                                 const AppendixDoc::Row& b) {
    if (a.order != b.order) return a.order > b.order;
    if (a.exponent != b.exponent) return a.exponent > b.exponent;
    return a.word < b.word;
  });
  return doc;
}

namespace {
std::string exp_latex(const std::vector<Rat>& v) {
  std::string s = "\\left[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_latex(v[i]);
  }
  return s + "\\right]";
}

std::string word_latex(const WeylWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int i : w) s += "w_{" + std::to_string(i + 1) + "}";
  return s;
}
}  // namespace

std::string AppendixDoc::latex() const {
  std::ostringstream os;
  os << "\\begin{thm}\nLet $G=" << group.substr(0, 1) << "_{" << group.substr(1)
     << "}$, and let $\\para{P}=\\para{P}_{" << parabolic + 1 << "}$. Then $E_{\\para{P}}"
     << "(f^{0},g,s)$ " << (order >= 1 ? "admits a pole of order $" + std::to_string(order) + "$"
                                       : "is holomorphic")
     << " at $s= " << rat_latex(s0) << " $.\n";
  if (order >= 1)
    os << "Moreover, the leading term $\\Lambda_{-" << order << "}(f^{0},g, " << rat_latex(s0)
       << " )$ is " << (square_int ? "in $L^{2}$" : "not in $L^{2}$") << ".\n";
  os << "\\end{thm}\n";
  for (const auto& pf : proofs) {
    os << "For the exp. $" << exp_latex(pf.exponent) << "$:\n\\begin{align*}\n";
    for (std::size_t k = 0; k < pf.y.size(); ++k)
      os << "y" << k + 1 << "&=\\zeta( " << pf.y[k].latex() << " ) "
         << (k + 1 < pf.y.size() ? "&" : "") << (k % 4 == 3 ? "\\\\\n" : " ");
    os << "\n\\end{align*}\n";
    os << "After a common denominator the class sum is $$\\frac{";
    for (std::size_t t = 0; t < pf.numerators.size(); ++t) {
      if (t) os << " + ";
      for (int yi : pf.numerators[t]) os << "y_{" << yi + 1 << "} ";
    }
    os << "}{";
    for (int yi : pf.denominator) os << "y_{" << yi + 1 << "} ";
    os << "} .$$ Since the denominator is holomorphic and non zero we may ignore it.\n";
    for (std::size_t t = 0; t < pf.summands.size(); ++t) {
      os << "For the summand: $";
      for (int yi : pf.numerators[t]) os << "y_{" << yi + 1 << "} ";
      os << "$ we get: $$" << pf.summands[t].latex() << "$$\n";
    }
    os << "In conclusion the final sum is: $$" << pf.total.latex() << "$$\n";
    if (pf.order >= 0)
      os << "Hence, this exponent contributes a pole of at most order $" << pf.order << "$.\n";
  }
  os << "\\begin{longtable}{|c|c|c|c|c|}\n\\hline pole & order & operator & factor & exp \\\\\n";
  for (const auto& r : rows) {
    os << " \\hline $ " << rat_latex(s0) << " $ & $ " << r.order << " $ & $ "
       << word_latex(r.word) << " $ &$" << r.factor.latex() << "$&$ " << exp_latex(r.exponent)
       << " $ \\\\\n";
  }
  os << " \\hline \\end{longtable}\n";
  return os.str();
}

std::string AppendixDoc::text() const {
  std::ostringstream os;
  os << group << " P" << parabolic + 1 << " at s0 = " << rat_str(s0) << ": pole order " << order
     << (order >= 1 ? (square_int ? " (L2)" : " (not L2)") : "") << "\n";
  for (const auto& pf : proofs) {
    os << "class exp [";
    for (std::size_t i = 0; i < pf.exponent.size(); ++i)
      os << (i ? "," : "") << rat_str(pf.exponent[i]);
    os << "]: individual order " << pf.max_individual_order << " -> class order " << pf.order
       << "\n";
    for (std::size_t k = 0; k < pf.y.size(); ++k)
      os << "  y" << k + 1 << " = zeta(" << pf.y[k].str() << ")\n";
    os << "  final sum: " << pf.total.str() << "\n";
  }
  os << "rows:\n";
  for (const auto& r : rows) {
    os << "  order " << r.order << "  " << word_str(r.word) << "  " << r.factor.str() << "  [";
    for (std::size_t i = 0; i < r.exponent.size(); ++i)
      os << (i ? "," : "") << rat_str(r.exponent[i]);
    os << "]\n";
  }
  return os.str();
}

}  // namespace eisenpole
