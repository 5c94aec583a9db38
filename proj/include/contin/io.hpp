#pragma once

#include <json.hpp>
#include <string>

#include "contin/closed_set.hpp"
#include "contin/coding.hpp"
#include "contin/complex.hpp"
#include "contin/gadget.hpp"
#include "contin/order_encoder.hpp"
#include "contin/pl_homeo.hpp"

namespace contin {

using Json = nlohmann::ordered_json;

/// Raised for malformed documents (bad shape, bad rationals, or values that
/// violate the type's invariants).
class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Rationals are written as "p/q" strings (or "p" for integers).
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const ClosedSet1D& a);
ClosedSet1D closed_set_from_json(const Json& j);

Json to_json(const PLHomeo1D& h);
PLHomeo1D pl_homeo_from_json(const Json& j);

Json to_json(const LinearOrderSpec& r);
LinearOrderSpec order_from_json(const Json& j);

Json to_json(const RemovedIntervals& r);
RemovedIntervals removed_from_json(const Json& j);

/// {"dim":2,"box":[lo,hi],"cells":[{"seg":[p,q],"label":"cone"},...]}
/// with "point" and "rect" cells alike; a label with more than a role is an
/// object {"role":..,"n":..,"k":..,"side":..,"index":..}. A logistic chart
/// appears as "chart":{"axis":1,"bound":"9","f":"1/(1+2^-z)"}.
Json to_json(const GeoComplex& c);
GeoComplex complex_from_json(const Json& j);

Json to_json(const DSet& d);
DSet dset_from_json(const Json& j);

Json to_json(const IntSeq& s);
IntSeq int_seq_from_json(const Json& j);

Json read_json_file(const std::string& path);
/// Compact-free, 2-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace contin
