#ifndef DIAGMON_DIAGRAM_FORMS_HPP_
#define DIAGMON_DIAGRAM_FORMS_HPP_

// Closed-form descriptions of the Ehresmann data of partition and relation
// monoids, in terms of diagram parameters. They are independent of the
// definitional computations in ehresmann.hpp, which they are checked
// against.

#include <vector>

#include "diagmon/partition.hpp"
#include "diagmon/relation.hpp"

namespace diagmon {

  // With E = {id_A}: E_L(a) = {id_A : A contains supp(a)}, E_R dually with
  // cosupp. With F = {id_eps}: F_L(a) = {id_eps : eps inside ker(a)}, F_R
  // dually with coker.
  std::vector<Partition> e_left_closed(Partition const& a);
  std::vector<Partition> e_right_closed(Partition const& a);
  std::vector<Partition> f_left_closed(Partition const& a);
  std::vector<Partition> f_right_closed(Partition const& a);

  // a <=_r b for F: b refines a and every lower non-transversal of b is a
  // block of a. a <=_l b: the same with upper non-transversals.
  bool leq_r_f_closed(Partition const& a, Partition const& b);
  bool leq_l_f_closed(Partition const& a, Partition const& b);

  // a in Eb for E = {id_A}: a arises from b by detaching some upper
  // vertices into singletons. Checked block by block of b: lower-only
  // blocks survive, each upper-only block splits into at most one
  // non-singleton and singletons, and each transversal keeps its lower part
  // together with some of its upper points while the rest become
  // singletons.
  bool leq_r_e_closed(Partition const& a, Partition const& b);

  // F a contained in a F iff dom(a) = X or ker(a) is universal; a F in F a
  // iff codom(a) = X or coker(a) is universal.
  bool right_restriction_f_closed(Partition const& a);
  bool left_restriction_f_closed(Partition const& a);

  // Relations with E = {id_A}: a is the restriction of b to dom(a).
  bool relation_is_restriction(BinaryRelation const& a, BinaryRelation const& b);

}  // namespace diagmon

#endif  // DIAGMON_DIAGRAM_FORMS_HPP_
