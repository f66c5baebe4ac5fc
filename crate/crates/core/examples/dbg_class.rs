use frieze_core::variant::*;
use frieze_core::exact::Rational;
use num_bigint::BigInt;

fn rat(x: i64) -> Rational { Rational::from(BigInt::from(x)) }

fn main() {
    let n = 7usize;
    let b = 10i64;
    let m = n - 4;
    let p = 2 * n;
    let mut canon: std::collections::BTreeMap<Vec<i64>, Vec<Vec<i64>>> = Default::default();
    let mut seed = vec![[1i64, 1i64]; m];
    fn rec(n: usize, b: i64, r: usize, seed: &mut Vec<[i64;2]>, canon: &mut std::collections::BTreeMap<Vec<i64>, Vec<Vec<i64>>>) {
        let m = n - 4;
        if r == m {
            let vals: Vec<[Rational;2]> = seed.iter().map(|p| [rat(p[0]), rat(p[1])]).collect();
            let dz = DoubleZigzag::aligned(n, vals).unwrap();
            if let Ok(t) = variant_from_double_zigzag(&dz) {
                let rows = t.rows();
                if !rows.iter().flatten().all(|v| v.is_integer() && *v > rat(0)) { return; }
                let as_i: Vec<Vec<i64>> = rows[1..rows.len()-1].iter().map(|r| r.iter().map(|v| i64::try_from(v.to_integer()).unwrap()).collect()).collect();
                let pp = 2 * n;
                let mut best: Option<Vec<i64>> = None;
                for s in 0..pp {
                    let mut ser = vec![];
                    for row in &as_i { for c in 0..pp { ser.push(row[(c+s)%pp]); } }
                    if best.as_ref().map(|bb| ser < *bb).unwrap_or(true) { best = Some(ser); }
                    let mut ser = vec![];
                    for row in as_i.iter().rev() { for c in 0..pp { ser.push(row[(c+s+n)%pp]); } }
                    if best.as_ref().map(|bb| ser < *bb).unwrap_or(true) { best = Some(ser); }
                }
                canon.insert(best.unwrap(), as_i);
            }
            return;
        }
        for x in 1..=b { for y in 1..=b {
            seed[r] = [x, y];
            rec(n, b, r+1, seed, canon);
        }}
    }
    rec(n, b, 0, &mut seed, &mut canon);
    println!("{} translation+glide classes", canon.len());

    // stats: minimal period, mirror-symmetric?
    let mut by = std::collections::BTreeMap::<(usize, bool), usize>::new();
    for rows in canon.values() {
        let mut minp = p;
        for cand in 1..=p {
            if p % cand != 0 { continue; }
            if rows.iter().all(|row| (0..p).all(|c| row[c] == row[(c+cand)%p])) { minp = cand; break; }
        }
        // mirror-symmetric: exists shift s with mirrored == original (incl glide)
        let mirrored: Vec<Vec<i64>> = rows.iter().map(|row| (0..p).map(|c| row[(p - c) % p]).collect()).collect();
        let mut sym = false;
        for s in 0..p {
            if rows.iter().zip(&mirrored).all(|(a, bb)| (0..p).all(|c| a[c] == bb[(c+s)%p])) { sym = true; break; }
            let mirrored_flip: Vec<Vec<i64>> = mirrored.iter().rev().cloned().collect();
            if rows.iter().zip(&mirrored_flip).all(|(a, bb)| (0..p).all(|c| a[c] == bb[(c+s+n)%p])) { sym = true; break; }
        }
        *by.entry((minp, sym)).or_default() += 1;
    }
    for ((minp, sym), count) in by {
        println!("min period {minp:2}  mirror-symmetric {sym}: {count}");
    }
}
