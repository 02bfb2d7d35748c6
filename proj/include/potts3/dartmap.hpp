#ifndef POTTS3_DARTMAP_HPP
#define POTTS3_DARTMAP_HPP

#include "potts3/multipoly.hpp"
#include "potts3/polynu.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace potts3 {

// Rooted combinatorial map: sigma = counterclockwise rotation at each vertex,
// alpha = fixed-point-free edge involution, darts 0..2e-1. Faces are the
// cycles of d -> sigma(alpha(d)); the root face is the orbit of the root
// dart under that permutation. The atomic map has no darts and root = -1.
struct DartMap {
    std::vector<int> sigma;
    std::vector<int> alpha;
    int root = -1;

    int darts() const { return static_cast<int>(sigma.size()); }
    int edges() const { return darts() / 2; }
    int face_next(int d) const { return sigma[static_cast<size_t>(alpha[static_cast<size_t>(d)])]; }

    bool is_atomic() const { return sigma.empty(); }
    void validate() const;  // permutation/involution/connectivity checks

    int vertex_count() const;
    int face_count() const;
    int genus2() const;  // 2 - v + e - f (0 iff planar)
    int outer_degree() const;

    // Canonical relabeling code from a deterministic traversal at the root;
    // two rooted maps are isomorphic iff their codes are equal.
    std::vector<int> canonical_code() const;
    DartMap canonical_form() const;

    // Dual: (sigma, alpha) -> (sigma alpha, alpha), same root dart. Vertices
    // and faces swap; the root face of the dual is the root vertex.
    DartMap dual() const;

    // Vertex id (index of the sigma-cycle) per dart.
    std::vector<int> vertex_ids() const;
};

// Exact Potts polynomial: sum over colourings c: V -> {1..q} of nu^{mono(c)},
// for integer q >= 1, returned as a polynomial in "nu".
PolyNu potts_polynomial(const DartMap& m, long q);

// Bivariate (q, nu) version by Lagrange interpolation in q at v+1 points.
MultiPoly potts_polynomial_qnu(const DartMap& m);

// All rooted planar near-triangulations with outer degree i and exactly v
// vertices, one representative per rooted isomorphism class.
std::vector<DartMap> enumerate_near_triangulations(int v, int i);

struct OracleSeries {
    int outer_degree;
    long q;  // 0 = bivariate symbolic
    // coeffs[n] = [w^n] sum_M P_M / q over maps with v(M) = n, as a
    // polynomial in (q, nu); zero entries where no maps exist.
    std::vector<MultiPoly> coeffs;
    std::vector<size_t> map_counts;  // per vertex count
};

// Definition-level T_i through w^{v_max}: q = 0 means symbolic (q, nu).
OracleSeries oracle_series(int i, int v_max, long q);

// JSON exchange: {"darts": 2e, "sigma": [...], "alpha": [...], "root": d}
// with 1-based darts in the file.
std::string dartmap_to_json(const DartMap& m);
DartMap dartmap_from_json(const std::string& text);

}  // namespace potts3

#endif
