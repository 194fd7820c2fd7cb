//! Report documents and their canonical JSON form.
//!
//! Every command emits a [`ReportDocument`]: the tool version, an echo of
//! the parsed inputs, the operation-specific results, the list of
//! mathematical facts the results rely on, and the randomness seed. The JSON
//! form is canonical (object keys sorted, fixed pretty-printing, trailing
//! newline), so identical inputs produce byte-identical output and a parsed
//! document re-emits to the same bytes.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub inputs: Value,
    pub results: Value,
    pub citations: Vec<String>,
    pub seed: u64,
}

impl ReportDocument {
    pub fn new(inputs: Value, results: Value, citations: &[&str], seed: u64) -> Self {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            inputs,
            results,
            citations: citations.iter().map(|c| c.to_string()).collect(),
            seed,
        }
    }

    /// Canonical JSON: serde_json's value model keeps object keys sorted, so
    /// serializing through `Value` fixes the byte representation.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("document serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value prints");
        out.push('\n');
        out
    }
}

/// The mathematical facts reports may assert, as plain statements. Each
/// document cites the facts its results depend on.
pub mod facts {
    pub const WINDOW: &str = "Semistable quadric bundles exist only for parameters alpha with \
         d - (n-1) dL/2 <= alpha <= d/n, and the degree must satisfy 2d <= n dL.";
    pub const WALL_FAMILIES: &str =
        "Every parameter where the semistable locus can change is a rational value where some \
         subobject inequality degenerates: d/n, (d-d')/(n-n'), (d-2d')/(n-2n'), d'/n', or a \
         two-step filtration value (d-d'-d'')/(n-n'-n'').";
    pub const CHAMBER_CONSTANCY: &str =
        "Between consecutive critical values the set of semistable quadric bundles is constant.";
    pub const CLASSIFY: &str =
        "alpha-semistability of a split quadric bundle is decided clause-by-clause over \
         coordinate subbundles, by how the symmetric map meets each one, plus two-step \
         coordinate filtrations; the parameter gate alpha <= d/n applies throughout.";
    pub const ALPHA_INDEPENDENT: &str =
        "Configurations with an isotropic middle-dimensional subbundle of half degree, or a \
         filtration pair of complementary rank and degree, are strictly semistable at every \
         admissible parameter value and are never stable.";
    pub const SEMISTABLE_SLOPE_BOUND: &str =
        "An alpha-semistable quadric bundle satisfies n alpha <= d <= rk(gamma) dL/2 + \
         (n - rk(gamma)) alpha.";
    pub const TOP_CHAMBER: &str =
        "In the chamber directly below d/n, alpha-semistability of the quadric bundle forces \
         slope-semistability of the underlying vector bundle.";
    pub const MAX_DEGREE: &str =
        "At the maximal degree d = n dL/2 a top-chamber semistable symmetric map is generically \
         nondegenerate; for dL even the moduli space is that of orthogonal bundles, and for dL \
         odd that of bundles orthogonal with respect to the twisting line bundle itself.";
    pub const MAX_DEGREE_COMPONENTS: &str =
        "For dL even and n >= 3 the orthogonal-bundle moduli space at maximal degree has at \
         least 2^(2g+1) connected components.";
    pub const WALL_LOCALITY: &str =
        "A verdict change between adjacent chambers is witnessed at the separating wall by a \
         subobject whose stability slack vanishes there.";
    pub const RANK2_WALLS: &str =
        "For n = 2 the critical values are d/2 together with every integer in \
         [d - dL/2, d/2].";
    pub const EXPECTED_DIMENSION: &str =
        "For d < dL - g + 1 the rank-two moduli space is smooth of dimension 3(dL - d) + g - 1 \
         at stable points.";
    pub const FLIP_CODIMENSION: &str =
        "The loci exchanged when the parameter crosses a rank-two wall have codimension at \
         least g - 1.";
    pub const CONNECTEDNESS: &str =
        "For d < dL - g + 1 and alpha <= d/2 the rank-two moduli space is nonempty and \
         connected.";
    pub const MILNOR_WOOD: &str =
        "The moduli space of Sp(2n,R)-Higgs bundles with Toledo invariant d is nonempty exactly \
         when |d| <= n(g-1), and d -> -d is a duality on it.";
    pub const HIGGS_MINIMA: &str =
        "For 0 < d < n(g-1) the minimal locus of the energy function on the Sp(2n,R)-Higgs \
         moduli space is a moduli space of canonically twisted quadric bundles; for \
         n(1-g) < d < 0 the minima have vanishing symmetric map instead.";
    pub const HIGGS_CONNECTED: &str =
        "For n = 2 and 0 < |d| < 2g - 2 the Sp(4,R)-Higgs moduli space with Toledo invariant d \
         is connected.";
    pub const SO023_TWIST: &str =
        "SO0(2,3)-Higgs bundles correspond to rank-two quadric bundles twisted in degree \
         2g - 1, with an extra topological class in Z/2.";
    pub const FIBER_DIMENSION: &str =
        "Over a stable vector bundle with d < (n/2)(dL + 2 - 2g) the fiber of the forgetful map \
         is a projective space of dimension (-d + (n/2)(dL + 1 - g))(n + 1) - 1.";
    pub const BETTI: &str =
        "For d < dL + 2 - 2g and g >= 4 the rank-two moduli space has first Betti numbers \
         (0, 2, 2g) and Picard rank 2.";
    pub const IRREDUCIBLE: &str =
        "For d < dL + 2 - 2g the rank-two moduli space is irreducible, and simply connected \
         when g >= 3 or d is odd.";
    pub const TORELLI: &str =
        "For g >= 5 and d < dL + 2 - 2g the rank-two moduli space determines the curve.";
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn canonical_json_sorts_keys_and_round_trips() {
        let doc = ReportDocument::new(
            json!({"zeta": 1, "alpha": 2}),
            json!({"b": [1, 2], "a": {"y": 0, "x": 1}}),
            &[facts::WINDOW],
            7,
        );
        let text = doc.to_canonical_json();
        assert!(text.ends_with('\n'));
        // Keys appear sorted at every level.
        let alpha = text.find("\"alpha\"").unwrap();
        let zeta = text.find("\"zeta\"").unwrap();
        assert!(alpha < zeta);

        // Parsing and re-emitting is byte-identical.
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let mut reprinted = serde_json::to_string_pretty(&parsed).unwrap();
        reprinted.push('\n');
        assert_eq!(reprinted, text);
    }

    #[test]
    fn documents_with_identical_inputs_are_byte_identical() {
        let make = || {
            ReportDocument::new(json!({"n": 2}), json!({"walls": []}), &[facts::RANK2_WALLS], 0)
        };
        assert_eq!(make().to_canonical_json(), make().to_canonical_json());
    }
}
