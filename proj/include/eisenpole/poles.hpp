#pragma once

#include <optional>

#include "eisenpole/gkfactors.hpp"
#include "eisenpole/laurent.hpp"
#include "eisenpole/orbits.hpp"

namespace eisenpole {

struct PipelineOptions {
  long digits = 60;      // numeric-certificate precision (decimal digits)
  int depth = 1;         // initial truncation beyond the constant term
  int max_retries = 4;   // doubling retries on inconclusive cancellation
  int threads = 1;
};

// Potential poles: s with Re s > 0 where some nilradical coroot pairing of
// chi_{P,s} (PlusHalf convention) hits 0 or 1. Always contains 1/2.
std::vector<Rat> potential_poles(const RootDatum& d, int parabolic);

// Cosets with equal image w . chi_{s0}; the representative is the
// (length, word)-least member and the exponent is the image in the
// simple-root basis.
struct EquivalenceClass {
  Rat s0;
  WeylWord representative;
  std::vector<WeylWord> members;
  Weight image;
  std::vector<Rat> exponent;
};

std::vector<EquivalenceClass> equivalence_classes(const RootDatum& d, int parabolic,
                                                  const Rat& s0);

// Pole data of the class sum N^#: orders, leading coefficient, certificate.
struct ClassOrder {
  int max_individual_order = 0;
  PoleOrder pole;
  int retries = 0;
};

ClassOrder class_order(const RootDatum& d, int parabolic, const EquivalenceClass& cls,
                       const ZetaNumeric* num, const PipelineOptions& opt = {});

// Langlands criterion for the leading term of one class: the image lies in
// the strictly negative simple-root cone.
bool square_integrable(const RootDatum& d, const EquivalenceClass& cls);

// Dominant representative bookkeeping for the orbit correspondence
// (MinusHalf convention; both conventions share the dominant orbit point).
std::optional<std::string> orbit_label(const RootDatum& d, int parabolic, const Rat& s0);

struct PoleEntry {
  Rat s0;
  long d_p = 0;             // geometric upper bound |N_1|-|N_0|-(n-1)
  int order = 0;            // computed order of the pole (0: holomorphic)
  bool order_certified = false;
  bool square_int = false;
  std::optional<std::string> orbit;
  std::vector<Rat> assumptions;  // zeta nonvanishing assumptions used
  bool inconclusive = false;

  struct ClassDetail {
    EquivalenceClass cls;
    ClassOrder ord;
    bool square_int = false;
  };
  std::vector<ClassDetail> classes;
};

struct PoleReport {
  std::string group;
  int parabolic = 0;  // 0-based
  int cosets = 0;
  bool denominator_ok = false;
  std::vector<PoleEntry> entries;  // sorted by s0

  bool any_inconclusive() const;
  std::string to_json() const;
  std::string to_latex() const;  // the per-parabolic table block
  std::string to_text() const;
};

PoleReport pole_report(const RootDatum& d, int parabolic, const PipelineOptions& opt = {});

// Appendix-style proof document for one potential pole.
struct AppendixDoc {
  struct Row {
    int order;
    WeylWord word;
    ZetaProduct factor;
    std::vector<Rat> exponent;
  };
  struct ClassProof {
    std::vector<Rat> exponent;
    std::vector<AffLin> y;               // numbered zeta arguments
    std::vector<std::vector<int>> numerators;  // terms as indices into y
    std::vector<int> denominator;        // common denominator as indices
    std::vector<LaurentPoly> summands;
    LaurentPoly total;
    int max_individual_order;
    int order;
  };
  std::string group;
  int parabolic;
  Rat s0;
  int order = 0;
  bool square_int = false;
  std::vector<Row> rows;             // one per coset, sorted like the tables
  std::vector<ClassProof> proofs;    // classes with several members and poles
  std::string latex() const;
  std::string text() const;
};

AppendixDoc emit_appendix_proof(const RootDatum& d, int parabolic, const Rat& s0,
                                const PipelineOptions& opt = {});

}  // namespace eisenpole
