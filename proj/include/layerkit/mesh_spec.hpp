#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>

#include "layerkit/mesh.hpp"

namespace layerkit {

enum class MeshFamily {
    Uniform,
    Shishkin,
    SType,
    BakhvalovOriginal,
    BakhvalovType,
    Gartland,
    GartlandType,
    DuranLombardi,
    Lambert,
    Sidorov,
    EmelyanovComposite,
    Equidistributed,
};

enum class LayerSide { Left, Right, Both };

std::string family_name(MeshFamily family);
MeshFamily family_from_name(const std::string& name);

/// Parameters for one mesh family. Fields not used by a family are ignored.
struct MeshSpec {
    MeshFamily family = MeshFamily::Shishkin;
    double eps = 1e-4;    // perturbation parameter, in (0,1]
    double gamma = 1.0;   // layer strength lower bound
    double mu = 2.0;      // transition exponent
    int n = 64;           // target subinterval count (even for split families)
    double q = 0.5;       // Bakhvalov portion parameter, in (0,1)
    double H = 0.1;       // coarse step target for recursive families
    double kappa = 1.0;   // Duran-Lombardi grading factor
    double theta = 1.0;   // generalized S-type scaling, lambda(1/2) = ln(theta N)
    std::function<double(double)> psi;  // S-type mesh-characterizing function;
                                        // empty means the Bakhvalov-Shishkin choice
    double first_step = 0.0;  // Sidorov h_1 (A)
    double last_step = 0.0;   // Sidorov h_N (B)
    LayerSide side = LayerSide::Left;
};

enum class MeshFlag {
    None,
    /// Construction degenerated (transition point clamped at 1/2, or no C1
    /// tangency point exists); the uniform mesh was returned instead.
    UniformFallback,
};

struct GeneratedMesh {
    Mesh1D mesh;
    MeshFlag flag = MeshFlag::None;
    /// Fine/coarse transition coordinate where the family defines one.
    double transition = std::numeric_limits<double>::quiet_NaN();
    /// Bakhvalov C1 matching point in index space.
    double tau = std::numeric_limits<double>::quiet_NaN();
    /// Family-specific measured quantities (Sidorov/Emelyanov constants, ...).
    std::map<std::string, double> stats;
};

} // namespace layerkit
