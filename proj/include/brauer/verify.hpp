#pragma once

#include "brauer/algebra.hpp"
#include "brauer/homotopy.hpp"
#include "brauer/reflect.hpp"

#include <string>
#include <vector>

namespace brauer {

struct WitnessResult {
    std::string kind; // "zeta", "eta", "theta"
    int cycle_tag;
    int from_label; // summand label; the cone is labeled by its slot vertex
    int to_label;
    bool nonzero_mod_homotopy;
    bool not_rad_squared;
    bool pass() const { return nonzero_mod_homotopy && not_rad_squared; }
};

struct SerreEntry {
    int x_label;
    int j;
    int dim_x_to_cone;
    int dim_cone_to_x;
};

// Claim results for the tilting complex of one algebra at one vertex.
struct TiltingReport {
    int t;
    long long field;
    std::map<int, int> vanishing; // shift -> total dim over summand pairs
    bool vanishing_pass;
    std::vector<SerreEntry> serre;
    bool serre_pass;
    bool generation_pass;
    IntMatrix endo; // labels = sorted vertices; t's slot is the cone
    std::vector<WitnessResult> witnesses;
    bool witnesses_pass;
    bool pass() const {
        return vanishing_pass && serre_pass && generation_pass && witnesses_pass;
    }
};

// Runs the claim checks for T(t) = (sum of other projectives) + cone.
// Witnesses are constructed only when the quiver is Brauer-tree shaped.
TiltingReport verify_tilting(const AlgebraTable& alg, int t);

// Full per-(tree, edge, field) record including the Cartan prediction for the
// reflected tree.
struct VerificationReport {
    std::string tree_code;
    int edge;
    long long field;
    TiltingReport claims;
    IntMatrix predicted_cartan; // of the reflected tree, t' at t's slot
    bool cartan_match;
    int reflected_edge; // t'
    double elapsed_ms;
    bool pass() const { return claims.pass() && cartan_match; }
};

VerificationReport verify_reflection(const PlanarTree& tree, EdgeId t, long long p);

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

} // namespace brauer
