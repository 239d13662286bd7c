use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Generators,
    F,
    Center,
    Main,
    Structure,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Generators,
        Suite::F,
        Suite::Center,
        Suite::Main,
        Suite::Structure,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Generators => "generators",
            Suite::F => "f",
            Suite::Center => "center",
            Suite::Main => "main",
            Suite::Structure => "structure",
            Suite::Counts => "counts",
        }
    }
}

/// Whether a relation makes sense on any module or needs the geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Any,
    Geometry,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct RelationSpec {
    pub id: &'static str,
    pub suite: Suite,
    pub identity: &'static str,
    pub scope: Scope,
}

const fn rel(id: &'static str, suite: Suite, identity: &'static str, scope: Scope) -> RelationSpec {
    RelationSpec {
        id,
        suite,
        identity,
        scope,
    }
}

use Scope::{Any, Geometry};
use Suite::{Center, Counts, Generators, Main, Structure, F};

/// Every relation the verifier knows, in report order.
pub const REGISTRY: &[RelationSpec] = &[
    rel("generators.k1l1", Generators, "K1 L1 = q L1 K1", Any),
    rel("generators.k1l2", Generators, "K1 L2 = L2 K1", Any),
    rel("generators.k1r1", Generators, "q K1 R1 = R1 K1", Any),
    rel("generators.k1r2", Generators, "K1 R2 = R2 K1", Any),
    rel("generators.k2l1", Generators, "K2 L1 = L1 K2", Any),
    rel("generators.k2l2", Generators, "q K2 L2 = L2 K2", Any),
    rel("generators.k2r1", Generators, "K2 R1 = R1 K2", Any),
    rel("generators.k2r2", Generators, "K2 R2 = q R2 K2", Any),
    rel("generators.l1r2", Generators, "L1 R2 = R2 L1", Any),
    rel("generators.l2r1", Generators, "L2 R1 = R1 L2", Any),
    rel("generators.l1l2", Generators, "q L1 L2 = L2 L1", Any),
    rel("generators.r1r2", Generators, "R1 R2 = q R2 R1", Any),
    rel(
        "generators.cubic_r1",
        Generators,
        "R1^2 L1 - (q+1) R1 L1 R1 + q L1 R1^2 = -q^{(h+k)/2-1} (q+1) K1^-1 K2 R1",
        Any,
    ),
    rel(
        "generators.cubic_r2",
        Generators,
        "q R2^2 L2 - (q+1) R2 L2 R2 + L2 R2^2 = -q^{(h+k)/2} (q+1) K1 K2^-1 R2",
        Any,
    ),
    rel(
        "generators.cubic_l1",
        Generators,
        "q L1^2 R1 - (q+1) L1 R1 L1 + R1 L1^2 = -q^{(h+k)/2} (q+1) K1^-1 K2 L1",
        Any,
    ),
    rel(
        "generators.cubic_l2",
        Generators,
        "L2^2 R2 - (q+1) L2 R2 L2 + q R2 L2^2 = -q^{(h+k)/2-1} (q+1) K1 K2^-1 L2",
        Any,
    ),
    rel(
        "generators.mixed",
        Generators,
        "L1 R1 - R1 L1 + L2 R2 - R2 L2 = q^{(h+k)/2} (q-1)^-1 (K1 K2^-1 - K1^-1 K2)",
        Any,
    ),
    rel("f.f0_combinatorial", F, "F0 from covers = F0 from generators", Geometry),
    rel(
        "f.fplus_combinatorial",
        F,
        "F+ from covers = F+ from generators",
        Geometry,
    ),
    rel(
        "f.fminus_combinatorial",
        F,
        "F- from covers = F- from generators",
        Geometry,
    ),
    rel("f.f_combinatorial", F, "F from covers = F0 + F+ + F-", Geometry),
    rel("f.r_combinatorial", F, "R from covers = L1 R2", Geometry),
    rel("f.l_combinatorial", F, "L from covers = L2 R1", Geometry),
    rel("f.a_combinatorial", F, "A from covers = R + L + F", Geometry),
    rel("f.r_transpose", F, "R = L^t", Geometry),
    rel(
        "f.f0_second_form",
        F,
        "F0 = R2 L2 - L2 R2 + (q-1)^-1 (q^{(h+k)/2} K1 K2^-1 - q^{k/2} K1 - q^{h/2} K2 + I)",
        Any,
    ),
    rel("f.back_l1r1", F, "L1 R1 = F0 + F- + (q-1)^-1 (q^{k/2} K1 - I)", Any),
    rel(
        "f.back_r1l1",
        F,
        "R1 L1 = F- + q^{h/2} (q-1)^-1 (q^{k/2} K1^-1 - I) K2",
        Any,
    ),
    rel(
        "f.back_l2r2",
        F,
        "L2 R2 = F+ + q^{k/2} (q-1)^-1 K1 (q^{h/2} K2^-1 - I)",
        Any,
    ),
    rel("f.back_r2l2", F, "R2 L2 = F0 + F+ + (q-1)^-1 (q^{h/2} K2 - I)", Any),
    rel(
        "f.f_first_form",
        F,
        "F = L1 R1 + L2 R2 - (q-1)^-1 (q^{(h+k)/2} K1 K2^-1 - I)",
        Any,
    ),
    rel(
        "f.f_second_form",
        F,
        "F = R1 L1 + R2 L2 - (q-1)^-1 (q^{(h+k)/2} K1^-1 K2 - I)",
        Any,
    ),
    rel("f.commute_f0_fplus", F, "F0 F+ = F+ F0", Any),
    rel("f.commute_f0_fminus", F, "F0 F- = F- F0", Any),
    rel("f.commute_fplus_fminus", F, "F+ F- = F- F+", Any),
    rel("f.r_second_form", F, "R = R2 L1", Any),
    rel("f.l_second_form", F, "L = R1 L2", Any),
    rel(
        "f.a_first_form",
        F,
        "A = (L1 + L2)(R1 + R2) - (q-1)^-1 (q^{(h+k)/2} K1 K2^-1 - I)",
        Any,
    ),
    rel(
        "f.a_second_form",
        F,
        "A = (R1 + R2)(L1 + L2) - (q-1)^-1 (q^{(h+k)/2} K1^-1 K2 - I)",
        Any,
    ),
    rel("center.omega0_l1", Center, "Omega0 L1 = L1 Omega0", Any),
    rel("center.omega0_l2", Center, "Omega0 L2 = L2 Omega0", Any),
    rel("center.omega0_r1", Center, "Omega0 R1 = R1 Omega0", Any),
    rel("center.omega0_r2", Center, "Omega0 R2 = R2 Omega0", Any),
    rel("center.omega0_k1", Center, "Omega0 K1 = K1 Omega0", Any),
    rel("center.omega0_k2", Center, "Omega0 K2 = K2 Omega0", Any),
    rel("center.omega1_l1", Center, "Omega1 L1 = L1 Omega1", Any),
    rel("center.omega1_l2", Center, "Omega1 L2 = L2 Omega1", Any),
    rel("center.omega1_r1", Center, "Omega1 R1 = R1 Omega1", Any),
    rel("center.omega1_r2", Center, "Omega1 R2 = R2 Omega1", Any),
    rel("center.omega1_k1", Center, "Omega1 K1 = K1 Omega1", Any),
    rel("center.omega1_k2", Center, "Omega1 K2 = K2 Omega1", Any),
    rel("center.omega2_l1", Center, "Omega2 L1 = L1 Omega2", Any),
    rel("center.omega2_l2", Center, "Omega2 L2 = L2 Omega2", Any),
    rel("center.omega2_r1", Center, "Omega2 R1 = R1 Omega2", Any),
    rel("center.omega2_r2", Center, "Omega2 R2 = R2 Omega2", Any),
    rel("center.omega2_k1", Center, "Omega2 K1 = K1 Omega2", Any),
    rel("center.omega2_k2", Center, "Omega2 K2 = K2 Omega2", Any),
    rel(
        "center.f0_from_omega",
        Center,
        "F0 = (q-1)^-1 (q^{(h+k)/2} Omega0 K1 K2 - q^{k/2} K1 - q^{h/2} K2 + I)",
        Any,
    ),
    rel(
        "center.fplus_from_omega",
        Center,
        "F+ = (q-1)^-1 (q^{k/2} Omega2 - (q-1)^-1 (q^{(h+k)/2+1} (Omega0 K2 + K2^-1) - 2 q^{k/2+1} I)) K1",
        Any,
    ),
    rel(
        "center.fminus_from_omega",
        Center,
        "F- = (q-1)^-1 (q^{h/2} Omega1 - (q-1)^-1 (q^{(h+k)/2+1} (Omega0 K1 + K1^-1) - 2 q^{h/2+1} I)) K2",
        Any,
    ),
    rel(
        "center.omega0_weight_preserving",
        Center,
        "Omega0 E*_{i,j}V in E*_{i,j}V",
        Any,
    ),
    rel(
        "center.omega1_weight_preserving",
        Center,
        "Omega1 E*_{i,j}V in E*_{i,j}V",
        Any,
    ),
    rel(
        "center.omega2_weight_preserving",
        Center,
        "Omega2 E*_{i,j}V in E*_{i,j}V",
        Any,
    ),
    rel(
        "main.askey1",
        Main,
        "A^2 A* - (q+q^-1) A A* A + A* A^2 - Y (A A* + A* A) - P A* = Omega A + G",
        Any,
    ),
    rel(
        "main.askey2",
        Main,
        "A*^2 A - (q+q^-1) A* A A* + A A*^2 = Y A*^2 + Omega A* + G*",
        Any,
    ),
    rel("main.y_commutes_a", Main, "Y A = A Y", Any),
    rel("main.y_commutes_astar", Main, "Y A* = A* Y", Any),
    rel("main.p_commutes_a", Main, "P A = A P", Any),
    rel("main.p_commutes_astar", Main, "P A* = A* P", Any),
    rel("main.omega_commutes_a", Main, "Omega A = A Omega", Any),
    rel("main.omega_commutes_astar", Main, "Omega A* = A* Omega", Any),
    rel("main.g_commutes_a", Main, "G A = A G", Any),
    rel("main.g_commutes_astar", Main, "G A* = A* G", Any),
    rel("main.gstar_commutes_a", Main, "G* A = A G*", Any),
    rel("main.gstar_commutes_astar", Main, "G* A* = A* G*", Any),
    rel(
        "structure.estar_orthogonal",
        Structure,
        "E*_l E*_m = delta_{l,m} E*_l",
        Any,
    ),
    rel("structure.estar_sum", Structure, "sum_l E*_l = I", Any),
    rel("structure.estar_levels", Structure, "E*_l = sum_{i+j=l} E*_{i,j}", Any),
    rel("structure.astar_diagonal", Structure, "A* = diag(q^i)", Any),
    rel("structure.support_l1", Structure, "L1 E*_{i,j}V in E*_{i-1,j}V", Any),
    rel("structure.support_l2", Structure, "L2 E*_{i,j}V in E*_{i,j-1}V", Any),
    rel("structure.support_r1", Structure, "R1 E*_{i,j}V in E*_{i+1,j}V", Any),
    rel("structure.support_r2", Structure, "R2 E*_{i,j}V in E*_{i,j+1}V", Any),
    rel("structure.support_r", Structure, "R E*_{i,j}V in E*_{i-1,j+1}V", Any),
    rel("structure.support_l", Structure, "L E*_{i,j}V in E*_{i+1,j-1}V", Any),
    rel("structure.support_f0", Structure, "F0 E*_{i,j}V in E*_{i,j}V", Any),
    rel("structure.support_fplus", Structure, "F+ E*_{i,j}V in E*_{i,j}V", Any),
    rel("structure.support_fminus", Structure, "F- E*_{i,j}V in E*_{i,j}V", Any),
    rel("structure.support_f", Structure, "F E*_{i,j}V in E*_{i,j}V", Any),
    rel(
        "structure.support_a",
        Structure,
        "A E*_{i,j}V in E*_{i+1,j-1}V + E*_{i,j}V + E*_{i-1,j+1}V",
        Any,
    ),
    rel(
        "counts.slash_covers",
        Counts,
        "each u in P_{i,j} slash-covers q^j [i] elements",
        Geometry,
    ),
    rel(
        "counts.backslash_covers",
        Counts,
        "each u in P_{i,j} backslash-covers [j] elements",
        Geometry,
    ),
    rel(
        "counts.slash_covered_by",
        Counts,
        "each u in P_{i,j} is slash-covered by [k-i] elements",
        Geometry,
    ),
    rel(
        "counts.backslash_covered_by",
        Counts,
        "each u in P_{i,j} is backslash-covered by q^{k-i} [h-j] elements",
        Geometry,
    ),
    rel(
        "counts.level_sizes",
        Counts,
        "|P_l| = Gaussian binomial (h+k choose l)_q",
        Geometry,
    ),
];
