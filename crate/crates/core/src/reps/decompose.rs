use super::{freudenthal_multiplicities, RepError, WeightMultiset};
use crate::rootdata::RootDatum;
use crate::weight::WeightVec;

/// Irreducible content of a character. Highest weights are extracted by
/// maximal `⟨·, 2ρ^∨⟩`, ties broken by the lexicographically largest weight;
/// the result is listed in extraction order.
pub fn decompose_weights(
    datum: &RootDatum,
    ws: &WeightMultiset,
    dim_cap: u64,
) -> Result<Vec<(WeightVec, u64)>, RepError> {
    let mut rest = ws.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let top = rest
            .iter()
            .map(|(w, _)| w)
            .max_by(|a, b| datum.height(a).cmp(&datum.height(b)).then_with(|| a.cmp(b)))
            .expect("nonempty")
            .clone();
        if !datum.is_dominant(&top) {
            return Err(RepError::NotACharacter(top));
        }
        let k = rest.get(&top);
        let chi = freudenthal_multiplicities(datum, &top, dim_cap)?;
        for (w, m) in chi.iter() {
            rest.remove(w, m * k).map_err(RepError::NotACharacter)?;
        }
        out.push((top, k));
    }
    Ok(out)
}
