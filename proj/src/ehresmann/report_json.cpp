#include "diagmon/ehresmann.hpp"

namespace diagmon {

  Json to_json(EhresmannReport const& r, Semilattice const& E) {
    Json axioms           = Json::object();
    Json witnesses        = Json::object();
    Json witness_elements = Json::object();
    for (Axiom a : kAllAxioms) {
      std::string const name(axiom_name(a));
      axioms[name] = r.holds(a);
      if (!r.holds(a)) {
        witnesses[name] = r[a].witness;
        Json elems      = Json::array();
        for (Index x : r[a].witness) {
          elems.push_back(to_json(E.parent().element(x)));
        }
        witness_elements[name] = std::move(elems);
      }
    }
    Json out;
    out["axioms"]             = std::move(axioms);
    out["witnesses"]          = std::move(witnesses);
    out["witness_elements"]   = std::move(witness_elements);
    out["tilde_class_counts"] = {{"R", r.r_classes}, {"L", r.l_classes}, {"H", r.h_classes}};
    out["sweep"]              = r.sweep == Sweep::exhaustive ? "exhaustive" : "generators";
    out["plus"]               = r.plus ? Json(*r.plus) : Json(nullptr);
    out["star"]               = r.star ? Json(*r.star) : Json(nullptr);
    return out;
  }

}  // namespace diagmon
