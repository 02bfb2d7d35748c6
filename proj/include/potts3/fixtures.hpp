#ifndef POTTS3_FIXTURES_HPP
#define POTTS3_FIXTURES_HPP

#include "potts3/multipoly.hpp"
#include "potts3/rootisol.hpp"

#include <map>
#include <string>
#include <vector>

namespace potts3 {

struct AlgebraicFixture {
    std::string name;
    std::string provenance;
    MultiPoly polynomial;
    size_t expected_monomials = 0;
    std::map<std::string, uint32_t> expected_degrees;
};

// Loads the fixture directory (manifest.json + one file per polynomial) and
// re-verifies every structural checksum; a degree or monomial-count mismatch
// signals a transcription error and throws.
class FixtureSet {
  public:
    explicit FixtureSet(std::string dir = default_dir());
    static std::string default_dir();

    const AlgebraicFixture& get(const std::string& name) const;
    const MultiPoly& poly(const std::string& name) const { return get(name).polynomial; }
    std::vector<std::string> names() const;
    const std::string& dir() const { return dir_; }

    // beta -> nu - 1; result keeps the remaining variables plus "nu".
    static MultiPoly expand_beta(const MultiPoly& p);

    // The singularity-candidate product factors at a numeric nu, univariate
    // in their second variable (w or rho).
    UCPoly delta_at(const std::string& name, const Coef& nu_value) const;

  private:
    std::string dir_;
    std::map<std::string, AlgebraicFixture> fixtures_;
};

UCPoly to_ucpoly(const MultiPoly& p, const std::string& var);
MultiPoly from_ucpoly(const UCPoly& p, const std::vector<std::string>& vars,
                      const std::string& var);

}  // namespace potts3

#endif
