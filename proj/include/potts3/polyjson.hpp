#ifndef POTTS3_POLYJSON_HPP
#define POTTS3_POLYJSON_HPP

#include "potts3/multipoly.hpp"

#include <json.hpp>

#include <string>

namespace potts3 {

// Canonical polynomial file format:
//   {"vars": [names...],
//    "field": "Q" | "Q(sqrt d)",
//    "terms": [[num, den, [e1,...,ek]], ...]}
// with gcd(num,den)=1, den>0, terms sorted descending in grlex order and no
// zero coefficients. Q(sqrt d) coefficients replace the num/den pair by
// [[num_a,den_a],[num_b,den_b]]. Numerators and denominators are written as
// decimal strings so arbitrary-precision values survive JSON round-trips.
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

MultiPoly load_poly_file(const std::string& path);
void save_poly_file(const MultiPoly& p, const std::string& path);

}  // namespace potts3

#endif
