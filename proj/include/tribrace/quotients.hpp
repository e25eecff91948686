#pragma once

#include <optional>
#include <vector>

#include "tribrace/brace.hpp"
#include "tribrace/group.hpp"
#include "tribrace/trifact.hpp"

namespace tribrace {

// Whether the quotient of a tuple by a normal subgroup is again a tuple.
// Three equivalent characterisations, all evaluated unconditionally:
// the quotient factor sets pass validation, the two product equalities
// T = (TnK)(TnE) = (TnH)(TnE), and the absorbed form
// T = ((TnK)H n (TnK)E)(TnE).
struct QuotientReport {
  std::vector<Elem> t_members;
  bool quotient_is_tuple = false;
  bool product_equalities = false;
  bool absorbed_form = false;
  bool agree() const {
    return quotient_is_tuple == product_equalities && product_equalities == absorbed_form;
  }
  bool admissible() const { return quotient_is_tuple; }
  // present when admissible
  std::optional<TrifactorisedGroup> quotient;
  std::vector<Elem> reps;  // least-index representative per coset
  std::optional<TrifactMorphism> projection;
};

QuotientReport quotient_admissible(const TrifactorisedGroup& T, std::vector<Elem> Tn);

struct TupleQuotient {
  TrifactorisedGroup quotient;
  TrifactMorphism projection;
  std::vector<Elem> reps;
};

// Quotient tuple with its certified projection. The induced derivation
// sends hT to sigma(h)T; this is verified, not assumed. Throws DomainError
// when the subgroup is not admissible.
TupleQuotient quotient_trifact(const TrifactorisedGroup& T, std::vector<Elem> Tn);

struct IdealQuotient {
  TrifactorisedGroup quotient;
  TrifactMorphism projection;
  BraceQuotientResult braces;  // the matching brace-side quotient
};

// Quotient by LH n LE for the subgroup L attached to an ideal I of the
// associated brace (I in brace indices). Certifies that the associated brace
// of the result equals the brace quotient table for table, and that a source
// with trivial recovered kernel keeps K n H = 1 in the quotient.
IdealQuotient ideal_quotient_tuple(const TrifactorisedGroup& T, std::vector<Elem> I);

// For a small tuple (trivial centraliser of K in E): does the quotient by Tn
// still have that property? Throws DomainError when the source is not small
// or Tn is not admissible.
bool quotient_stays_small(const TrifactorisedGroup& T, std::vector<Elem> Tn);

// Quotient by a normal subgroup contained in E. Always admissible; the
// associated brace is unchanged (certified), only the quotient map to the
// E-factor gets coarser.
TupleQuotient quotient_by_e_normal(const TrifactorisedGroup& T, std::vector<Elem> Tn);

// The explicit epimorphism between the tuples of nested admissible kernels
// N1 <= N2: k eta1(c) maps to k eta2(c). Its kernel sits inside the E-factor
// of the source. With N1 = {0} this exhibits every tuple of B as a quotient
// of the biggest one; with N2 = ker lambda, the smallest one as a quotient
// of every tuple.
struct ChainEpimorphism {
  TrifactorisedGroup source;  // tuple of N1
  TrifactorisedGroup target;  // tuple of N2
  TrifactMorphism morphism;
  std::vector<Elem> kernel;  // sorted G1 indices
  bool kernel_in_e = false;
};

ChainEpimorphism quotient_chain(const SkewBrace& B, std::vector<Elem> N1, std::vector<Elem> N2,
                                const Bounds& bounds = Bounds::active());

}  // namespace tribrace
