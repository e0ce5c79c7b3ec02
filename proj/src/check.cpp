#include "lmkit/check.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "lmkit/error.hpp"

namespace lmkit {

namespace {

LMnAlgebra two_chain_as_lm3() {
  DistLattice lat = lattice_from_poset(make_poset({"0", "1"}, {{0, 1}}));
  std::vector<std::vector<int>> phi = {{0, 1}, {0, 1}};
  return make_algebra(std::move(lat), 3, std::move(phi));
}

bool needs_duality(const CheckInstance& inst, std::vector<CheckFailure>& out) {
  if (!inst.duality) {
    out.push_back({inst.name, "dualization failed: " + inst.preparation_error});
    return false;
  }
  return true;
}

bool needs_con(const CheckInstance& inst, std::vector<CheckFailure>& out) {
  if (!needs_duality(inst, out)) return false;
  if (!inst.con) {
    out.push_back(
        {inst.name, "congruence lattice unavailable: " + inst.preparation_error});
    return false;
  }
  return true;
}

std::string pair_name(const LMnAlgebra& a, int x, int y) {
  return "('" + a.name_of(x) + "','" + a.name_of(y) + "')";
}

// Distinct principal congruences of the instance, LM or theta flavor.
std::vector<Congruence> distinct_principals(const Duality& d, bool theta) {
  std::vector<Congruence> out;
  for (int a = 0; a < d.algebra.size(); ++a) {
    for (int b = a; b < d.algebra.size(); ++b) {
      if (!d.algebra.lattice.leq(a, b)) continue;
      Congruence c = theta ? principal_theta_congruence(d, a, b)
                           : principal_congruence(d, a, b);
      if (std::find(out.begin(), out.end(), c) == out.end())
        out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;

  defs.push_back(
      {"algebra-axioms",
       "every corpus algebra satisfies the defining laws L1-L5",
       {"duality"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         const ValidationReport report = validate_axioms(inst.algebra);
         if (!report.ok())
           out.push_back({inst.name, report.violations.front().law + ": " +
                                         report.violations.front().witness});
         return true;
       }});

  defs.push_back(
      {"boolean-elements",
       "the four descriptions of Boolean elements agree, C(A) is a Boolean "
       "sublattice, and every phi_i maps into C(A)",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         const auto& a = inst.algebra;
         const Mask c = boolean_elements(a);  // throws on L6 disagreement
         if (!has_bit(c, a.bottom()) || !has_bit(c, a.top())) {
           out.push_back({inst.name, "C(A) misses a bound"});
           return true;
         }
         bool closed = true;
         for_each_bit(c, [&](int x) {
           for_each_bit(c, [&](int y) {
             if (!has_bit(c, a.lattice.jn(x, y)) ||
                 !has_bit(c, a.lattice.mt(x, y)))
               closed = false;
           });
           const auto comp = complement_of(a.lattice, x);
           if (!comp || !has_bit(c, *comp)) closed = false;
         });
         if (!closed)
           out.push_back({inst.name, "C(A) is not closed under the operations"});
         for (int i = 1; i <= a.n - 1; ++i) {
           for (int x = 0; x < a.size(); ++x) {
             if (!has_bit(c, a.phi_at(i, x)))
               out.push_back({inst.name, "phi_" + std::to_string(i) + " '" +
                                             a.name_of(x) +
                                             "' lands outside C(A)"});
           }
         }
         return true;
       }});

  defs.push_back(
      {"sigma-representation",
       "sigma is an injective bounded-lattice homomorphism onto the "
       "increasing subsets of the dual space",
       {"duality"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         const auto& a = inst.algebra;
         if (d.sigma[a.bottom()] != 0)
           out.push_back({inst.name, "sigma(0) is not empty"});
         if (d.sigma[a.top()] != d.all_points())
           out.push_back({inst.name, "sigma(1) is not the whole space"});
         for (int x = 0; x < a.size(); ++x) {
           for (int y = 0; y < a.size(); ++y) {
             if (d.sigma[a.lattice.jn(x, y)] != (d.sigma[x] | d.sigma[y]))
               out.push_back({inst.name, "sigma does not turn join into union at " +
                                             pair_name(a, x, y)});
             if (d.sigma[a.lattice.mt(x, y)] != (d.sigma[x] & d.sigma[y]))
               out.push_back(
                   {inst.name, "sigma does not turn meet into intersection at " +
                                   pair_name(a, x, y)});
             if (x != y && d.sigma[x] == d.sigma[y])
               out.push_back({inst.name, "sigma is not injective at " +
                                             pair_name(a, x, y)});
           }
         }
         std::vector<Mask> image(d.sigma);
         std::sort(image.begin(), image.end());
         if (image != increasing_sets(d.space.poset))
           out.push_back(
               {inst.name, "sigma image differs from the increasing subsets"});
         return true;
       }});

  defs.push_back(
      {"duality-round-trip",
       "sigma and epsilon are isomorphisms onto the double dual and "
       "|D(X(A))| = |A|",
       {"duality"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         round_trip(inst.algebra);  // throws RoundTripFailure with a witness
         const auto carrier = co_dual_carrier(inst.duality->space);
         if (static_cast<int>(carrier.size()) != inst.algebra.size())
           out.push_back({inst.name, "|D(X(A))| differs from |A|"});
         return true;
       }});

  defs.push_back(
      {"space-axioms",
       "every dual space satisfies lP3-lP5, lP8-lP11 and the equivalent "
       "surjectivity conditions lnP6, lnP7, lnP8",
       {"duality"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const ValidationReport report = validate_space(inst.duality->space);
         for (const auto& v : report.violations)
           out.push_back({inst.name, v.law + ": " + v.witness});
         // lP7 in its increasing-subset form
         const auto increasing = increasing_sets(inst.duality->space.poset);
         for (const Mask u : increasing) {
           for (const Mask v : increasing) {
             if (u == v) continue;
             bool same = true;
             for (int i = 1; i <= inst.duality->space.n - 1; ++i) {
               if (inst.duality->space.preimage(i, u) !=
                   inst.duality->space.preimage(i, v))
                 same = false;
             }
             if (same)
               out.push_back({inst.name,
                              "distinct increasing subsets share every "
                              "f_i-preimage"});
           }
         }
         return true;
       }});

  defs.push_back(
      {"chain-decomposition",
       "the dual space is a cardinal sum of maximal chains of at most n-1 "
       "points, and the blocks are convex and modal",
       {"duality"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         for (const Mask block : chain_decomposition(d.space)) {
           const SubsetFlags flags = classify_subset(d.space, block);
           if (!flags.convex || !flags.modal || !flags.theta_subset)
             out.push_back({inst.name, "a chain block is not convex and modal"});
         }
         return true;
       }});

  defs.push_back(
      {"dual-hom",
       "identities, projections and the diagonal dualize correctly, duals "
       "reverse composition, and non-homomorphisms are rejected",
       {"duality"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         const int m = inst.algebra.size();
         std::vector<int> id(m);
         std::iota(id.begin(), id.end(), 0);
         const std::vector<int> dual_id = dual_hom(d, d, id);
         for (int p = 0; p < d.num_points(); ++p) {
           if (dual_id[p] != p)
             out.push_back({inst.name, "dual of the identity is not the identity"});
         }

         // projections and the diagonal on the square, kept to small carriers
         if (m * m <= kMaxElements) {
           const LMnAlgebra square = make_product(inst.algebra, inst.algebra);
           const Duality ds = dualize(square);
           std::vector<int> proj1(square.size()), diag(m);
           for (int x = 0; x < m; ++x) {
             for (int y = 0; y < m; ++y) proj1[x * m + y] = x;
             diag[x] = x * m + x;
           }
           const std::vector<int> dual_proj = dual_hom(ds, d, proj1);
           const std::vector<int> dual_diag = dual_hom(d, ds, diag);
           // proj1 . diag = id, so dual(diag) . dual(proj1) = id on X(A)
           for (int p = 0; p < d.num_points(); ++p) {
             if (dual_diag[dual_proj[p]] != p)
               out.push_back(
                   {inst.name, "duals do not reverse the composition"});
           }
         }

         // a collapsing non-homomorphism must be rejected
         if (m >= 3) {
           std::vector<int> bad(id);
           // send every non-top element to bottom
           for (int x = 0; x < m; ++x)
             bad[x] = (x == inst.algebra.top()) ? inst.algebra.top()
                                                : inst.algebra.bottom();
           bool rejected = false;
           try {
             dual_hom(d, d, bad);
           } catch (const NotAHomomorphism&) {
             rejected = true;
           }
           if (!rejected)
             out.push_back({inst.name, "non-homomorphism was accepted"});
         }
         return true;
       }});

  defs.push_back(
      {"convex-clopen",
       "a subset of the dual space is convex iff it is a difference of "
       "increasing subsets",
       {"duality"},
       [](const CheckInstance& inst, const CheckOptions& opt,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         const auto& poset = d.space.poset;
         if (d.num_points() > opt.max_space_size) return false;
         for (Mask r = 0;; ++r) {
           const Mask u = up_set(poset, r);
           const Mask v = u & ~r;
           const bool difference_form =
               up_set(poset, v) == v && (u & ~v) == r;
           if (is_convex(poset, r) != difference_form)
             out.push_back({inst.name,
                            "convexity and the difference form disagree"});
           if (r == d.all_points()) break;
         }
         const auto increasing = increasing_sets(poset);
         for (const Mask u : increasing) {
           for (const Mask v : increasing) {
             if (!is_subset(v, u)) continue;
             if (!is_convex(poset, u & ~v))
               out.push_back(
                   {inst.name, "difference of increasing subsets is not convex"});
           }
         }
         return true;
       }});

  defs.push_back(
      {"subset-lemma",
       "for clopen subsets of a finite dual space: theta-subset, semimodal, "
       "modal and union-of-maximal-chains coincide; modal subsets have modal "
       "complements and are convex, increasing and decreasing",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions& opt,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         if (d.num_points() > opt.max_space_size) return false;
         for (Mask y = 0;; ++y) {
           const SubsetFlags flags = classify_subset(d.space, y);
           if (flags.semimodal != flags.modal ||
               flags.modal != flags.theta_subset)
             out.push_back({inst.name,
                            "semimodal, modal and theta-subset disagree"});
           if (flags.modal) {
             const SubsetFlags comp =
                 classify_subset(d.space, d.all_points() & ~y);
             if (!comp.modal)
               out.push_back({inst.name, "complement of a modal set is not modal"});
             if (!flags.convex || !flags.increasing || !flags.decreasing)
               out.push_back(
                   {inst.name,
                    "modal set is not convex, increasing and decreasing"});
           }
           if (y == d.all_points()) break;
         }
         return true;
       }});

  defs.push_back(
      {"congruence-correspondence",
       "semimodal subsets correspond order-reversingly and bijectively to "
       "the congruences, which equal the join closure of the principal ones",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_con(inst, out)) return true;
         const CongruenceLattice& lat = *inst.con;
         if (!lat.enumerated_by_subsets) return false;
         // bijection, order reversal and principal-join cross-check run
         // inside all_congruences; validate the elements themselves here
         for (const Congruence& c : lat.elements) {
           if (const auto violation =
                   congruence_violation(inst.algebra, c))
             out.push_back({inst.name, *violation});
         }
         const int m = inst.algebra.size();
         if (lat.index_of(identity_congruence(m)) < 0 ||
             lat.index_of(total_congruence(m)) < 0)
           out.push_back({inst.name, "congruence lattice misses a bound"});
         return true;
       }});

  defs.push_back(
      {"theta-correspondence",
       "theta-subsets correspond to theta-congruences, and for integer n the "
       "theta-congruences are exactly the congruences",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions& opt,
          std::vector<CheckFailure>& out) {
         if (!needs_con(inst, out)) return true;
         const Duality& d = *inst.duality;
         const CongruenceLattice theta_lat =
             all_theta_congruences(d, opt.max_space_size);
         for (const Congruence& c : theta_lat.elements) {
           if (!is_theta_congruence(inst.algebra, c))
             out.push_back({inst.name, "enumerated relation fails the "
                                       "theta-congruence reflection"});
         }
         if (theta_lat.elements != inst.con->elements)
           out.push_back(
               {inst.name, "theta-congruences differ from the congruences"});
         return true;
       }});

  defs.push_back(
      {"principal-forms",
       "the set, sigma, modal and filter descriptions of a principal "
       "congruence coincide with the generation oracle for every pair",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         const int m = inst.algebra.size();
         for (int a = 0; a < m; ++a) {
           for (int b = 0; b < m; ++b) {
             try {
               const PrincipalForms forms = principal_congruence_forms(d, a, b);
               const Congruence oracle = generate_congruence_oracle(
                   inst.algebra, {{forms.lo, forms.hi}}, ClosureMode::lm);
               if (forms.result != oracle)
                 out.push_back({inst.name, "oracle disagreement at " +
                                               pair_name(inst.algebra, a, b)});
             } catch (const InternalError& e) {
               out.push_back({inst.name, std::string(e.what())});
             }
           }
         }
         return true;
       }});

  defs.push_back(
      {"principal-theta-forms",
       "the theta-congruence descriptions coincide with the theta oracle for "
       "every pair, and agree with the principal congruence for integer n",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         const int m = inst.algebra.size();
         for (int a = 0; a < m; ++a) {
           for (int b = a; b < m; ++b) {
             try {
               const PrincipalThetaForms forms =
                   principal_theta_congruence_forms(d, a, b);
               const Congruence oracle = generate_congruence_oracle(
                   inst.algebra, {{forms.lo, forms.hi}}, ClosureMode::theta);
               if (forms.result != oracle)
                 out.push_back({inst.name, "theta oracle disagreement at " +
                                               pair_name(inst.algebra, a, b)});
               if (forms.result != principal_congruence(d, a, b))
                 out.push_back({inst.name,
                                "theta and LM principal congruences differ at " +
                                    pair_name(inst.algebra, a, b)});
             } catch (const InternalError& e) {
               out.push_back({inst.name, std::string(e.what())});
             }
           }
         }
         return true;
       }});

  defs.push_back(
      {"principal-convex-criterion",
       "every congruence is principal, generated through a convex clopen set "
       "whose induced open set is modal",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_con(inst, out)) return true;
         for (const Congruence& c : inst.con->elements) {
           if (!is_principal(*inst.duality, c))
             out.push_back({inst.name, "congruence without principal witness"});
         }
         return true;
       }});

  defs.push_back(
      {"principal-intersection",
       "the intersection of two principal congruences is principal, in both "
       "the LM and the theta sense",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         for (const bool theta : {false, true}) {
           const std::vector<Congruence> principals =
               distinct_principals(d, theta);
           for (const Congruence& c1 : principals) {
             for (const Congruence& c2 : principals) {
               const Congruence intersection = meet(c1, c2);
               const auto witness = is_principal(d, intersection);
               if (!witness) {
                 out.push_back({inst.name,
                                std::string("intersection of two principal ") +
                                    (theta ? "theta-" : "") +
                                    "congruences has no witness pair"});
                 continue;
               }
               if (theta &&
                   principal_theta_congruence(d, witness->a, witness->b) !=
                       intersection)
                 out.push_back(
                     {inst.name,
                      "witness pair does not generate the intersection as a "
                      "theta-congruence"});
             }
           }
         }
         return true;
       }});

  defs.push_back(
      {"filter-correspondence",
       "filters and increasing subsets of the dual space translate into each "
       "other, and the filter congruence matches the subset congruence when "
       "the subset is semimodal",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         const auto& lat = inst.algebra.lattice;
         const int m = inst.algebra.size();
         // every filter of a finite lattice: upward closed, meet closed
         for (const Mask f : increasing_sets(lat.poset)) {
           if (f == 0) continue;
           bool meet_closed = true;
           for_each_bit(f, [&](int x) {
             for_each_bit(f, [&](int y) {
               if (!has_bit(f, lat.mt(x, y))) meet_closed = false;
             });
           });
           if (!meet_closed) continue;
           const FilterCongruenceResult result = filter_congruence(d, f);
           Mask back = 0;
           for (int a = 0; a < m; ++a) {
             if (is_subset(result.y_filter, d.sigma[a])) back |= bit(a);
           }
           if (back != f)
             out.push_back({inst.name, "filter does not round-trip through Y_F"});
         }
         // and back: every increasing subset of X arises as Y_{F_Y}
         for (const Mask y : increasing_sets(d.space.poset)) {
           Mask filter = 0;
           for (int a = 0; a < m; ++a) {
             if (is_subset(y, d.sigma[a])) filter |= bit(a);
           }
           const FilterCongruenceResult result = filter_congruence(d, filter);
           if (result.y_filter != y)
             out.push_back(
                 {inst.name, "increasing subset does not round-trip through F_Y"});
         }
         return true;
       }});

  defs.push_back(
      {"preimage-identity",
       "every subset R of the dual space satisfies R within the union of "
       "f_i-preimages of R, and that union equals the union of the down- and "
       "up-sets of R",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions& opt,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         if (d.num_points() > opt.max_space_size) return false;
         for (Mask r = 0;; ++r) {
           const Mask pre = d.space.union_preimages(r);
           const bool contained = is_subset(r, pre);
           if (!contained)
             out.push_back({inst.name, "R escapes its own f_i-preimages"});
           // finite reading of "the union of preimages is closed"
           const bool closed = true;
           if (closed != contained)
             out.push_back({inst.name,
                            "closedness and containment disagree on R"});
           if (contained &&
               pre != (down_set(d.space.poset, r) | up_set(d.space.poset, r)))
             out.push_back(
                 {inst.name, "union of preimages differs from (R] u [R)"});
           if (r == d.all_points()) break;
         }
         return true;
       }});

  defs.push_back(
      {"nonprincipality-vacuity",
       "the sufficient condition for a non-principal intersection needs a "
       "proper dense subset, which cannot exist in a finite discrete space",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         const auto closure = [](Mask z) { return z; };  // discrete space
         // general statement on small spaces
         if (d.num_points() <= 12) {
           for (Mask s = 0;; ++s) {
             for (Mask sub = (s - 1) & s;; sub = (sub - 1) & s) {
               const bool proper = sub != s;
               const bool dense = (closure(sub) & s) == s;
               if (proper && dense)
                 out.push_back({inst.name, "proper dense subset found"});
               if (sub == 0) break;
             }
             if (s == d.all_points()) break;
           }
         }
         // literal hypothesis over pairs of convex clopen difference sets
         const int m = inst.algebra.size();
         std::vector<Mask> differences;
         for (int a = 0; a < m; ++a) {
           for (int b = 0; b < m; ++b) {
             if (!inst.algebra.lattice.leq(a, b)) continue;
             const Mask r = d.sigma[b] & ~d.sigma[a];
             if (std::find(differences.begin(), differences.end(), r) ==
                 differences.end())
               differences.push_back(r);
           }
         }
         for (const Mask r1 : differences) {
           for (const Mask r2 : differences) {
             const Mask s = r1 & ~(r2 | d.space.union_preimages(r1));
             const Mask t = s & d.space.union_preimages(r2);
             const bool proper = t != s;
             const bool dense = (closure(t) & s) == s;
             if (proper && dense)
               out.push_back({inst.name, "hypothesis satisfiable on corpus space"});
           }
         }
         return true;
       }});

  defs.push_back(
      {"boolean-criterion",
       "a congruence has a complement iff its dual subset is modal iff the "
       "subset and its complement are semimodal iff it is a Boolean "
       "theta-congruence",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions& opt,
          std::vector<CheckFailure>& out) {
         if (!needs_con(inst, out)) return true;
         const Duality& d = *inst.duality;
         const CongruenceLattice theta_lat =
             all_theta_congruences(d, opt.max_space_size);
         for (const Congruence& c : inst.con->elements) {
           const auto complement =
               is_boolean(d, c, opt.max_space_size, &*inst.con);
           const Mask y = dual_subset_of(d, c);
           const bool both_semimodal =
               is_subset(d.space.union_images(y), y) &&
               is_subset(d.space.union_images(d.all_points() & ~y),
                         d.all_points() & ~y);
           if (complement.has_value() != both_semimodal)
             out.push_back({inst.name,
                            "complement search and semimodal-pair criterion "
                            "disagree"});
           // Boolean inside the theta-congruence lattice
           const int idx = theta_lat.index_of(c);
           bool boolean_theta = false;
           if (idx >= 0) {
             const int mm = inst.algebra.size();
             for (const Congruence& psi : theta_lat.elements) {
               if (meet(c, psi) == identity_congruence(mm) &&
                   join(c, psi) == total_congruence(mm))
                 boolean_theta = true;
             }
           }
           if (complement.has_value() != boolean_theta)
             out.push_back(
                 {inst.name, "Boolean and Boolean-theta membership disagree"});
         }
         return true;
       }});

  defs.push_back(
      {"boolean-count",
       "the Boolean congruences biject order-reversingly with the Boolean "
       "elements, so their number is |C(A)|",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         const auto records = boolean_congruences(d);
         const Mask booleans = boolean_elements(inst.algebra);
         if (static_cast<int>(records.size()) != popcount(booleans))
           out.push_back({inst.name, "record count differs from |C(A)|"});
         Mask seen = 0;
         for (const auto& rec : records) {
           if (has_bit(seen, rec.generator))
             out.push_back({inst.name, "generator repeated across records"});
           seen |= bit(rec.generator);
           if (d.sigma[rec.generator] != rec.dual_subset)
             out.push_back({inst.name, "generator does not generate its subset"});
         }
         if (seen != booleans)
           out.push_back({inst.name, "generators do not exhaust C(A)"});
         for (const auto& r1 : records) {
           for (const auto& r2 : records) {
             if (inst.algebra.lattice.leq(r1.generator, r2.generator) &&
                 !r2.congruence.refines(r1.congruence))
               out.push_back(
                   {inst.name, "generator map is not order-reversing"});
           }
         }
         return true;
       }});

  defs.push_back(
      {"boolean-filter-form",
       "Theta([phi_i a)) is a congruence for every element and index, and the "
       "Boolean congruences are exactly the Theta([phi_i c)) for c in C(A)",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions& opt,
          std::vector<CheckFailure>& out) {
         if (!needs_con(inst, out)) return true;
         const Duality& d = *inst.duality;
         const auto& lat = inst.algebra.lattice;
         for (int a = 0; a < inst.algebra.size(); ++a) {
           for (int i = 1; i <= inst.algebra.n - 1; ++i) {
             const FilterCongruenceResult r = filter_congruence(
                 d, lat.principal_filter(inst.algebra.phi_at(i, a)));
             if (!r.lm_compatible)
               out.push_back({inst.name, "Theta([phi_i a)) is not a congruence"});
             if (!is_boolean(d, r.congruence, opt.max_space_size, &*inst.con))
               out.push_back({inst.name, "Theta([phi_i a)) is not Boolean"});
           }
         }
         for (const auto& rec : boolean_congruences(d)) {
           for (int i = 1; i <= inst.algebra.n - 1; ++i) {
             if (boolean_from_element(d, rec.generator, i) != rec.congruence)
               out.push_back(
                   {inst.name,
                    "record congruence differs from its filter form"});
           }
         }
         return true;
       }});

  defs.push_back(
      {"boolean-is-principal",
       "every Boolean congruence is both a principal congruence and a "
       "principal theta-congruence",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         for (const auto& rec : boolean_congruences(d)) {
           const auto witness = is_principal(d, rec.congruence);
           if (!witness) {
             out.push_back({inst.name, "Boolean congruence is not principal"});
             continue;
           }
           bool theta_witness = false;
           for (int a = 0; a < inst.algebra.size() && !theta_witness; ++a) {
             for (int b = a; b < inst.algebra.size(); ++b) {
               if (!inst.algebra.lattice.leq(a, b)) continue;
               if (principal_theta_congruence(d, a, b) == rec.congruence) {
                 theta_witness = true;
                 break;
               }
             }
           }
           if (!theta_witness)
             out.push_back(
                 {inst.name, "Boolean congruence is not theta-principal"});
         }
         return true;
       }});

  defs.push_back(
      {"boolean-permutable",
       "Boolean congruences permute under relational composition",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const auto records = boolean_congruences(*inst.duality);
         for (const auto& r1 : records) {
           for (const auto& r2 : records) {
             if (!check_permutable(inst.algebra, r1.congruence, r2.congruence))
               out.push_back({inst.name, "Boolean congruences do not permute"});
           }
         }
         return true;
       }});

  defs.push_back(
      {"boolean-uniformity",
       "Boolean congruence classes all have the same size and follow the "
       "class-shape formula {(b ^ c) v d : d <= c'}",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         for (const auto& rec : boolean_congruences(*inst.duality)) {
           const UniformityReport report =
               uniformity_report(*inst.duality, rec.generator);
           if (!report.uniform)
             out.push_back({inst.name, "class sizes are not uniform"});
           if (!report.shape_ok)
             out.push_back({inst.name, "class-shape formula fails"});
         }
         return true;
       }});

  defs.push_back(
      {"principal-is-boolean",
       "for every pair the principal congruence is Boolean, certified by the "
       "meet of the elements phibar_i b v phi_i a",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_con(inst, out)) return true;
         const Duality& d = *inst.duality;
         const int m = inst.algebra.size();
         for (int a = 0; a < m; ++a) {
           for (int b = a; b < m; ++b) {
             if (!inst.algebra.lattice.leq(a, b)) continue;
             const PrincipalBooleanResult result =
                 principal_is_boolean(d, a, b, &*inst.con);
             if (!result.holds)
               out.push_back({inst.name, result.detail + " at " +
                                             pair_name(inst.algebra, a, b)});
           }
         }
         return true;
       }});

  defs.push_back(
      {"lmn-coincidence",
       "the set of principal congruences equals the set of Boolean "
       "congruences",
       {"boolean"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         if (!needs_duality(inst, out)) return true;
         const Duality& d = *inst.duality;
         std::vector<Congruence> principals = distinct_principals(d, false);
         std::vector<Congruence> booleans;
         for (const auto& rec : boolean_congruences(d))
           booleans.push_back(rec.congruence);
         auto by_classes = [](const Congruence& x, const Congruence& y) {
           return x.class_of < y.class_of;
         };
         std::sort(principals.begin(), principals.end(), by_classes);
         std::sort(booleans.begin(), booleans.end(), by_classes);
         if (principals != booleans)
           out.push_back(
               {inst.name, "principal and Boolean congruences differ as sets"});
         return true;
       }});

  defs.push_back(
      {"simplicity-spot-checks",
       "chains have exactly the two trivial congruences; the square of the "
       "three-element chain has exactly four",
       {"principal"},
       [](const CheckInstance& inst, const CheckOptions&,
          std::vector<CheckFailure>& out) {
         const bool is_chain_instance = inst.name.rfind("chain-", 0) == 0;
         const bool is_c3_square = inst.name == "product-3-3";
         if (!is_chain_instance && !is_c3_square) return false;
         if (!needs_con(inst, out)) return true;
         const int m = inst.algebra.size();
         if (is_chain_instance) {
           if (inst.con->size() != 2 ||
               inst.con->index_of(identity_congruence(m)) < 0 ||
               inst.con->index_of(total_congruence(m)) < 0)
             out.push_back({inst.name, "chain is not simple"});
         }
         if (is_c3_square && inst.con->size() != 4)
           out.push_back({inst.name, "square of the 3-chain does not have 4 "
                                     "congruences"});
         return true;
       }});

  return defs;
}

}  // namespace

std::vector<NamedAlgebra> default_corpus() {
  std::vector<NamedAlgebra> corpus;
  for (int n = 2; n <= 5; ++n)
    corpus.push_back({"chain-" + std::to_string(n), make_chain(n)});
  for (int n = 2; n <= 5; ++n) {
    const LMnAlgebra chain = make_chain(n);
    if (chain.size() * chain.size() <= 25)
      corpus.push_back({"product-" + std::to_string(n) + "-" + std::to_string(n),
                        make_product(chain, chain)});
  }
  corpus.push_back({"lm3-two-chain", two_chain_as_lm3()});
  corpus.push_back(
      {"lm3-mixed", make_product(make_chain(3), two_chain_as_lm3())});
  return corpus;
}

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = build_registry();
  return registry;
}

bool known_suite(const std::string& suite) {
  return suite == "all" || suite == "duality" || suite == "principal" ||
         suite == "boolean";
}

bool CheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.ok(); });
}

int CheckReport::failed_checks() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckResult& c) { return !c.ok(); }));
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["format"] = "lmkit-report/1";
  j["suite"] = suite;
  j["corpus"] = corpus;
  nlohmann::json skipped_json = nlohmann::json::array();
  for (const auto& [input, error] : skipped)
    skipped_json.push_back({{"input", input}, {"error", error}});
  j["skipped"] = std::move(skipped_json);
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& check : checks) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : check.failures)
      failures.push_back({{"instance", f.instance}, {"witness", f.witness}});
    checks_json.push_back({{"id", check.id},
                           {"statement", check.statement},
                           {"suites", check.suites},
                           {"instances", check.instances},
                           {"failures", std::move(failures)},
                           {"elapsed_ms", check.elapsed_ms}});
  }
  j["checks"] = std::move(checks_json);
  j["summary"] = {{"checks", checks.size()},
                  {"failed", failed_checks()},
                  {"passed", checks.size() - failed_checks()}};
  return j;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& check : checks) {
    os << (check.ok() ? "[PASS] " : "[FAIL] ") << check.id << " ("
       << check.instances << " instances";
    if (!check.ok()) os << ", " << check.failures.size() << " failures";
    os << ")\n";
    for (const auto& f : check.failures)
      os << "       " << f.instance << ": " << f.witness << "\n";
  }
  os << (ok() ? "OK" : "FAILED") << ": " << checks.size() - failed_checks()
     << "/" << checks.size() << " checks passed";
  if (!skipped.empty()) os << ", " << skipped.size() << " inputs skipped";
  os << "\n";
  for (const auto& [input, error] : skipped)
    os << "       skipped " << input << ": " << error << "\n";
  return os.str();
}

CheckReport run_suite(
    const std::vector<NamedAlgebra>& corpus, const std::string& suite,
    const CheckOptions& options,
    const std::vector<std::pair<std::string, std::string>>& skipped) {
  if (!known_suite(suite)) throw InvalidInput("unknown suite '" + suite + "'");

  std::vector<CheckInstance> instances;
  instances.reserve(corpus.size());
  for (const auto& entry : corpus) {
    CheckInstance inst;
    inst.name = entry.name;
    inst.algebra = entry.algebra;
    try {
      inst.duality = dualize(entry.algebra);
      inst.con = all_congruences(*inst.duality, options.max_space_size);
    } catch (const std::exception& e) {
      inst.preparation_error = e.what();
    }
    instances.push_back(std::move(inst));
  }

  const auto& registry = check_registry();
  std::vector<std::size_t> selected;
  for (std::size_t k = 0; k < registry.size(); ++k) {
    const auto& suites = registry[k].suites;
    if (suite == "all" ||
        std::find(suites.begin(), suites.end(), suite) != suites.end())
      selected.push_back(k);
  }

  // execution order may be shuffled; the report is assembled canonically
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t c = 0; c < selected.size(); ++c) {
    for (std::size_t i = 0; i < instances.size(); ++i) tasks.emplace_back(c, i);
  }
  if (options.seed != 0) {
    std::mt19937 rng(options.seed);
    std::shuffle(tasks.begin(), tasks.end(), rng);
  }

  std::vector<CheckResult> results(selected.size());
  for (std::size_t c = 0; c < selected.size(); ++c) {
    const auto& def = registry[selected[c]];
    results[c].id = def.id;
    results[c].statement = def.statement;
    results[c].suites = def.suites;
  }

  for (const auto& [c, i] : tasks) {
    const auto& def = registry[selected[c]];
    auto& result = results[c];
    std::vector<CheckFailure> failures;
    const auto start = std::chrono::steady_clock::now();
    bool applicable = true;
    try {
      applicable = def.run(instances[i], options, failures);
    } catch (const std::exception& e) {
      failures.push_back(
          {instances[i].name, std::string("exception: ") + e.what()});
    }
    const auto stop = std::chrono::steady_clock::now();
    result.elapsed_ms +=
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (applicable) ++result.instances;
    for (auto& f : failures) result.failures.push_back(std::move(f));
  }

  // canonical order within each check: corpus position, then witness
  for (auto& result : results) {
    std::sort(result.failures.begin(), result.failures.end(),
              [&](const CheckFailure& a, const CheckFailure& b) {
                auto pos = [&](const std::string& name) {
                  for (std::size_t k = 0; k < instances.size(); ++k) {
                    if (instances[k].name == name) return k;
                  }
                  return instances.size();
                };
                const auto pa = pos(a.instance);
                const auto pb = pos(b.instance);
                if (pa != pb) return pa < pb;
                return a.witness < b.witness;
              });
    result.failures.erase(
        std::unique(result.failures.begin(), result.failures.end(),
                    [](const CheckFailure& a, const CheckFailure& b) {
                      return a.instance == b.instance &&
                             a.witness == b.witness;
                    }),
        result.failures.end());
  }

  CheckReport report;
  report.suite = suite;
  for (const auto& entry : corpus) report.corpus.push_back(entry.name);
  report.skipped = skipped;
  report.checks = std::move(results);
  return report;
}

}  // namespace lmkit
