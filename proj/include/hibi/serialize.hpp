#pragma once

/// JSON and text formats. Posets serialize as {"elements": [...], "covers":
/// [["a","b"], ...]}; the bottom and top vertices print as "_bot" and
/// "_top"; covering edges use the key "lower<upper" (element names cannot
/// contain '<'). Divisor coefficients of unbounded magnitude round-trip as
/// decimal strings when they do not fit a JSON number. A small constructor
/// DSL (chain:k, antichain:k, op(...), union(...), product(...)) builds the
/// standard example posets.

#include <string>
#include <vector>

#include <json.hpp>

#include "hibi/divisor.hpp"
#include "hibi/hibi_ring.hpp"
#include "hibi/ideal_lattice.hpp"
#include "hibi/numeric.hpp"
#include "hibi/order_polytope.hpp"
#include "hibi/poset.hpp"

namespace hibi {

using json = nlohmann::ordered_json;

json int_to_json(const Int& v);       // number when it fits int64, else string
Int int_from_json(const json& v);     // throws ParseError on non-integers

std::string vertex_name(const Poset& p, HasseVertex v);
std::string edge_key(const Poset& p, const CoveringEdge& e);
CoveringEdge edge_from_key(const AugmentedPoset& p, const std::string& key);

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

/// chain:<k> | antichain:<k> | op(<expr>) | union(<expr>,<expr>) |
/// product(<expr>,<expr>). Throws ParseError.
Poset poset_from_dsl(const std::string& text);

/// Accepts inline JSON (leading '{'), a DSL expression, or a path to a file
/// holding either.
Poset poset_from_source(const std::string& arg);

json ideal_to_json(const Poset& p, const OrderIdeal& ideal);
json subset_to_json(const Poset& p, const std::vector<int>& members);
json lattice_to_json(const Poset& p, const IdealLattice& lattice);
json polytope_to_json(const Poset& p, const OrderPolytope& poly);
json ring_to_json(const IdealLattice& lattice, const std::vector<MonomialGenerator>& gens,
                  const std::vector<HibiRelation>& rels);
json divisor_to_json(const Poset& p, const TorusDivisor& d);
TorusDivisor divisor_from_json(const AugmentedPoset& p, const json& j);
json class_to_json(const Poset& p, const DivisorClass& c);

std::string subset_to_text(const Poset& p, const std::vector<int>& members);  // "{a,b}"
std::string divisor_to_text(const Poset& p, const TorusDivisor& d);  // "2*a<_top - _bot<b"

}  // namespace hibi
