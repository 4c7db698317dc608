use super::free::{GradedFreeModule, ModuleMap};
use crate::algebra::{cmp_pos, Coeff, Monomial, PolyRing, VTerm, Vector};
use crate::groebner::groebner;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Dense pieces larger than this are left as they are.
const ECHELON_CAP: usize = 1 << 22;

/// Reduced row echelon form of homogeneous `gens`, taken degree by degree.
/// The span is unchanged, and a minimal generating set stays minimal.
pub fn echelon(ring: &PolyRing, twists: &[i64], gens: Vec<Vector>) -> Vec<Vector> {
    let f = *ring.field();
    let mut by_deg: BTreeMap<i64, Vec<Vector>> = BTreeMap::new();
    for g in gens {
        if let Some(d) = g.degree(ring, twists) {
            by_deg.entry(d).or_default().push(g);
        }
    }
    let mut out = Vec::new();
    for (_, group) in by_deg {
        let mut keys: Vec<(u32, Monomial)> = group.iter().flat_map(|v| v.terms().iter().map(|t| (t.comp, t.mon.clone()))).collect();
        keys.sort_by(|a, b| cmp_pos(ring, b.0, &b.1, a.0, &a.1));
        keys.dedup();
        if group.len() < 2 || keys.len() * group.len() > ECHELON_CAP {
            out.extend(group);
            continue;
        }
        let index: HashMap<&(u32, Monomial), usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut rows: Vec<Vec<Coeff>> = group
            .iter()
            .map(|v| {
                let mut row = vec![0; keys.len()];
                for t in v.terms() {
                    row[index[&(t.comp, t.mon.clone())]] = t.coeff;
                }
                row
            })
            .collect();
        let mut rank = 0;
        for c in 0..keys.len() {
            if rank == rows.len() {
                break;
            }
            let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(rank, p);
            let inv = f.inv(rows[rank][c]);
            for x in rows[rank].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pivot = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                let k = row[c];
                if i == rank || k == 0 {
                    continue;
                }
                for (x, &y) in row.iter_mut().zip(&pivot).skip(c) {
                    if y != 0 {
                        *x = f.sub(*x, f.mul(k, y));
                    }
                }
            }
            rank += 1;
        }
        for row in &rows[..rank] {
            let terms = row
                .iter()
                .zip(&keys)
                .filter(|(c, _)| **c != 0)
                .map(|(&coeff, (comp, mon))| VTerm { comp: *comp, mon: mon.clone(), coeff })
                .collect();
            out.push(Vector::from_sorted(terms));
        }
    }
    out
}

/// A minimal generating set of the submodule spanned by homogeneous `gens`.
pub fn minimal_generators(ring: &PolyRing, twists: &[i64], gens: &[Vector]) -> Vec<Vector> {
    let gens: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return gens;
    }
    let out = groebner(ring, twists, &gens);
    out.kept.into_iter().map(|k| gens[k].clone()).collect()
}

/// Generators of `{u : φ(u) ∈ N}` where `φ` has the given columns and `N` is
/// spanned by `extra` in the target. With `minimize`, the result is a minimal
/// generating set (homogeneous data only).
pub fn preimage(
    ring: &PolyRing,
    target_twists: &[i64],
    source_twists: &[i64],
    columns: &[Vector],
    extra: &[Vector],
    minimize: bool,
) -> Vec<Vector> {
    let a = target_twists.len() as u32;
    let m = source_twists.len() as u32;
    let mut twists = target_twists.to_vec();
    twists.extend_from_slice(source_twists);
    let mut gens: Vec<Vector> = Vec::with_capacity(columns.len() + extra.len());
    for (k, c) in columns.iter().enumerate() {
        gens.push(c.add(ring, &Vector::unit(ring, a + k as u32)));
    }
    gens.extend(extra.iter().filter(|e| !e.is_zero()).cloned());
    let gb = groebner(ring, &twists, &gens).basis;
    let ker: Vec<Vector> = gb.iter().filter(|v| v.lead().unwrap().comp >= a).map(|v| v.project(a, a + m)).collect();
    if minimize {
        minimal_generators(ring, source_twists, &ker)
    } else {
        ker
    }
}

/// A map whose image is the kernel of `map`.
pub fn syzygy(map: &ModuleMap) -> ModuleMap {
    let ring: &Arc<PolyRing> = map.ring();
    let homogeneous = map.is_homogeneous();
    let ker = preimage(ring, &map.target().twists, &map.source().twists, map.columns(), &[], homogeneous);
    ModuleMap::from_columns(ring, GradedFreeModule::new(map.source().twists.clone()), ker)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    #[test]
    fn koszul_relation() {
        let r = crate::algebra::PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let phi = ModuleMap::ideal_presentation(&r, &[x.clone(), y.clone()]);
        let k = syzygy(&phi);
        assert_eq!(k.source().twists, vec![2]);
        assert!(phi.compose(&k).is_zero());
        let c = k.columns()[0].components(&r, 2);
        assert!(c[0] == y || c[0] == y.neg());
    }

    #[test]
    fn echelon_sparsifies_dense_generators() {
        let r = crate::algebra::PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let a = &(&x * &x) + &(&x * &y);
        let b = &(&x * &x) - &(&y * &y);
        let c = &(&a + &b).scale(3);
        let gens: Vec<Vector> = [a, b, c.clone()].iter().map(|p| Vector::from_poly(p, 0)).collect();
        let e = echelon(&r, &[0], gens);
        assert_eq!(e.len(), 2);
        assert!(e.iter().all(|v| v.lead().unwrap().coeff == 1));
        let lead: Vec<_> = e.iter().map(|v| v.lead().unwrap().mon.clone()).collect();
        assert_ne!(lead[0], lead[1]);
        for v in &e {
            assert!(v.terms().iter().skip(1).all(|t| !lead.contains(&t.mon)));
        }
    }

    #[test]
    fn principal_ideal_has_no_syzygies() {
        let r = crate::algebra::PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let phi = ModuleMap::ideal_presentation(&r, &[&r.var(0) * &r.var(1)]);
        assert!(syzygy(&phi).columns().is_empty());
    }
}
