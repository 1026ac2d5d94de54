#pragma once

#include "f3.hpp"
#include "groebner.hpp"

#include <map>
#include <utility>

namespace trico {

// Weight presets for the two line bundles of the construction
enum class Preset { Mi, Mii, N };

// How the cover is presented: the full determinantal data (a, b, c, d),
// a bare cubic z^3 + r z + s, or the reduced pair z^3 + 3 d z - c
enum class Form { GeneralABCD, CubicRS, Cubic3DC };

enum class CaseLabel { M1, M2, M3, M4_PinZ, M4_PnotinZ, N, Unclassified };

enum class SingularityType { Ordinary, TripleTriple, Other };

std::string to_string(Preset p);
std::string to_string(Form f);
std::string to_string(CaseLabel c);
std::string to_string(SingularityType s);

struct PresetInfo {
    DivisorClass L1, L2;
};
PresetInfo preset_info(Preset p);

// section classes required from each named input under (form, preset);
// throws ValidationError on an unsupported combination
std::map<std::string, DivisorClass> section_weights(Form f, Preset p);

struct CoverSpec {
    Form form = Form::CubicRS;
    Preset preset = Preset::N;
    bool galois = false;
    std::map<std::string, MultiPoly> sections;  // over the V0 coordinates (t, u)
    unsigned long long spair_budget = 100000;
};

// weight membership of every section, exact key set, galois consistency
void validate_cover(const CoverSpec& spec);

// z^2 - a z - b w - A, z w + d z + a w + B, w^2 - c z - d w - C over
// (z, w, t, u), with A = 2(a^2 - bd), B = ad - bc, C = 2(d^2 - ac)
struct TripleCoverEquations {
    MultiPoly g1, g2, g3;
};
TripleCoverEquations build_general_equations(const CoverSpec& spec);

// z^3 + r z + s satisfied by z on the cover
struct CubicModel {
    MultiPoly r, s;  // over (t, u)
};
CubicModel reduce_to_cubic(const CoverSpec& spec);

// the discriminant section of class 2(L1 + L2) whose zero locus carries the
// branch divisor away from the section at infinity
MultiPoly branch_discriminant(const CoverSpec& spec);

// singular points of the total space over the V0 chart, via the Jacobian
// ideal of the cubic model in lex order z > u > t
SolutionSet singular_locus_V0(const CoverSpec& spec);

// smoothness certificates over the chart where b vanishes somewhere: the
// localised cubic Jacobian ideal and the determinantal rank ideal must both
// be trivial
bool general_smooth_V0(const CoverSpec& spec, unsigned long long* spairs = nullptr);

// fibre over infinity: top discriminant coefficient plus the V1 Jacobian
// certificate restricted to s = 0
bool check_smooth_over_infinity(const CoverSpec& spec, unsigned long long* spairs = nullptr);

// fibre of z^3 + r z + s has a triple root at the point
bool is_totally_ramified_at(const CoverSpec& spec, const PlanePoint& at);

struct BranchPointClass {
    SingularityType type = SingularityType::Other;
    unsigned multiplicity = 0;
};

// Local type of a plane curve germ: Ordinary(m) for an ordinary point of
// multiplicity m, TripleTriple for a triple point whose single blow up has
// another ordinary triple point on it, Other for anything else.
BranchPointClass classify_branch_point(const MultiPoly& disc, const PlanePoint& at);

struct PushforwardInvariants {
    long long pg = 0;
    long long chi = 0;
};
PushforwardInvariants invariants_pushforward(Preset p);

long long fiber_genus(Preset p);

// (K^2, pg) of the minimal surface attached to each classified case
std::pair<long long, long long> case_invariants(CaseLabel c);

struct BranchPointReport {
    PlanePoint at;  // V0 coordinates (t, u)
    bool totally_ramified = false;
    BranchPointClass cls;
};

struct ClassificationReport {
    CaseLabel label = CaseLabel::Unclassified;
    long long K2 = 0;  // meaningful only when label != Unclassified
    long long pg = 0;
    bool smooth_over_sigma_inf = false;
    bool solutions_complete = true;
    std::vector<PlanePoint> singular_points;       // total-space points (z, u, t)
    std::vector<BranchPointReport> branch_points;  // projected to (t, u)
    PushforwardInvariants pushforward;
    long long fibre_genus = 0;
    unsigned long long spairs_used = 0;
    std::string note;  // reason when Unclassified, empty otherwise
};

ClassificationReport classify_cover(const CoverSpec& spec);

}  // namespace trico
