//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion. Every
//! comparison is exact (tolerance 0); random instances come from fixed
//! ChaCha8 seeds. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use kas3::algebra::{fold_enumerator, weight_enumerator, BinaryCode, Polynomial};
use kas3::complex::{
    cycle_space_weight_enumerator, defect, enumerate_matchings_with_defect_within, perfect_matching_polynomial,
    TriangularConfiguration, Weighting,
};
use kas3::gadgets::{make_matching_triangular_triangle, make_s5, make_tunnel, tripartite_reduction};
use kas3::kasteleyn_construct::{build_t, certify_trivial_signing, SquareMatrix};
use kas3::lattice::{cubic_lattice, dimer_polynomial_direct, dimer_polynomial_tensor, EdgeWeights};
use kas3::tensor3::{
    apply_signing, binet_cauchy_c, binet_cauchy_rhs, determinant3, find_pfaffian_signing, permanent2, permanent3,
    projection_graphs, triadjacency, RectMatrixTriple, Tensor3,
};
use kas3::{Error, Exec};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn sign(p: &[usize]) -> i64 {
    let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    1 - 2 * (inv % 2) as i64
}

fn naive_per2(m: &[Vec<BigInt>]) -> BigInt {
    permutations(m.len()).iter().map(|p| (0..m.len()).map(|i| m[i][p[i]].clone()).product::<BigInt>()).sum()
}

fn naive_per_det3(t: &Tensor3<BigInt>) -> (BigInt, BigInt) {
    let n = t.dims()[0];
    let perms = permutations(n);
    let (mut per, mut det) = (BigInt::from(0), BigInt::from(0));
    for s1 in &perms {
        for s2 in &perms {
            let prod: BigInt = (0..n).map(|i| t.get([i, s1[i], s2[i]])).product();
            det += &prod * (sign(s1) * sign(s2));
            per += prod;
        }
    }
    (per, det)
}

fn brute_force_polynomial(cfg: &TriangularConfiguration, w: &Weighting) -> Polynomial {
    let tris: Vec<(&str, &[String; 3])> = cfg.triangles().collect();
    let all: BTreeSet<&str> = cfg.edge_ids().collect();
    let mut p = Polynomial::default();
    for mask in 0u32..1 << tris.len() {
        let mut covered = BTreeSet::new();
        let mut ok = true;
        let mut weight = 0;
        for (i, (id, es)) in tris.iter().enumerate() {
            if mask >> i & 1 == 1 {
                weight += w.get(id);
                for e in es.iter() {
                    ok &= covered.insert(e.as_str());
                }
            }
        }
        if ok && covered == all {
            p += Polynomial::x_pow(weight);
        }
    }
    p
}

/// 1 to 6 distinct faces on six vertices, weights in `[0, 5]`.
fn random_config(rng: &mut ChaCha8Rng) -> (TriangularConfiguration, Weighting) {
    let mut triples = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                triples.push([a, b, c].map(|v| format!("v{v}")));
            }
        }
    }
    let k = rng.gen_range(1..=6);
    let mut picks = BTreeSet::new();
    while picks.len() < k {
        picks.insert(rng.gen_range(0..triples.len()));
    }
    let faces: Vec<(String, [String; 3])> = picks.iter().map(|&i| (format!("t{i}"), triples[i].clone())).collect();
    let w = picks.iter().map(|&i| (format!("t{i}"), rng.gen_range(0..=5))).collect();
    (TriangularConfiguration::from_faces(&faces), w)
}

fn c1_gadgets() -> Verdict {
    let exec = Exec::Sequential;
    let none = BTreeSet::new();
    let tunnel = make_tunnel(exec).map_err(|e| e.to_string())?;
    let ms = enumerate_matchings_with_defect_within(tunnel.config(), &tunnel.end_edges(), exec).unwrap();
    let mut defects: Vec<BTreeSet<String>> = ms.iter().map(|m| defect(tunnel.config(), m).unwrap()).collect();
    defects.sort();
    let mut ends: Vec<BTreeSet<String>> = tunnel.ends().iter().map(|e| e.edges.iter().cloned().collect()).collect();
    ends.sort();
    ensure(defects == ends, || format!("tunnel defects {defects:?}"))?;

    let s5 = make_s5(exec).map_err(|e| e.to_string())?;
    let perfect = enumerate_matchings_with_defect_within(s5.config(), &none, exec).unwrap();
    ensure(perfect.len() == 1 && perfect[0].len() == 4, || format!("S5 perfect matchings {perfect:?}"))?;
    let all = s5.end_edges();
    let full: Vec<_> = enumerate_matchings_with_defect_within(s5.config(), &all, exec)
        .unwrap()
        .into_iter()
        .filter(|m| defect(s5.config(), m).unwrap() == all)
        .collect();
    ensure(full.len() == 1 && full[0].len() == 1, || format!("S5 all-ends matchings {full:?}"))?;

    let mtt = make_matching_triangular_triangle(exec).map_err(|e| e.to_string())?;
    let outer = mtt.end_edges();
    let ms = enumerate_matchings_with_defect_within(mtt.config(), &outer, exec).unwrap();
    let mut want = vec![mtt.matching("M^0").unwrap().clone(), mtt.matching("M^1").unwrap().clone()];
    want.sort();
    ensure(ms == want, || format!("MTT has {} matchings within its ends", ms.len()))?;
    let proper = ms.iter().filter(|m| {
        let d = defect(mtt.config(), m).unwrap();
        !d.is_empty() && d != outer
    });
    ensure(proper.count() == 0, || "MTT has a proper nonempty defect".into())?;
    Ok(format!(
        "tunnel 2 matchings (defects = each end), S5 1 perfect (size 4) + 1 all-ends (size 1), MTT exactly {{M^1, M^0}} of {} and {} triangles",
        want[1].len(),
        want[0].len()
    ))
}

struct Sweep {
    instances: usize,
    nonzero: usize,
    balanced: Vec<(TriangularConfiguration, kas3::complex::EdgeTripartition, Weighting, Polynomial)>,
}

fn sweep() -> Result<Sweep, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut s = Sweep {
        instances: 0,
        nonzero: 0,
        balanced: Vec::new(),
    };
    for i in 0..60 {
        let (cfg, w) = random_config(&mut rng);
        let p = brute_force_polynomial(&cfg, &w);
        let r = tripartite_reduction(&cfg, &w, Exec::Parallel).map_err(|e| format!("instance {i}: {e}"))?;
        let q = perfect_matching_polynomial(&r.config, &r.weights, Exec::Parallel).unwrap();
        ensure(p == q, || format!("instance {i}: P = {p}, P' = {q}"))?;
        let sizes = r.tripartition.sizes();
        let equal = sizes[0] == sizes[1] && sizes[1] == sizes[2];
        if !p.is_empty() {
            s.nonzero += 1;
            ensure(equal, || format!("instance {i}: P ≠ 0 but class sizes {sizes:?}"))?;
        }
        if equal {
            s.balanced.push((r.config, r.tripartition, r.weights, q));
        }
        s.instances += 1;
    }
    Ok(s)
}

fn c2_reduction(s: &Result<Sweep, String>) -> Verdict {
    let s = s.as_ref().map_err(Clone::clone)?;
    ensure(s.instances >= 50, || format!("only {} instances", s.instances))?;
    Ok(format!(
        "{} random configurations (≤ 6 triangles, weights 0..=5): P_Δ = P_Δ' exactly; {} with P_Δ ≠ 0, all with |E1| = |E2| = |E3|",
        s.instances, s.nonzero
    ))
}

fn c3_triadjacency(s: &Result<Sweep, String>) -> Verdict {
    let s = s.as_ref().map_err(Clone::clone)?;
    for (i, (cfg, trip, w, q)) in s.balanced.iter().enumerate() {
        let t = triadjacency(cfg, trip, w).map_err(|e| e.to_string())?;
        let per = permanent3(&t, Exec::Parallel);
        ensure(&per == q, || format!("balanced instance {i}: Per = {per}, P' = {q}"))?;
    }
    ensure(!s.balanced.is_empty(), || "no balanced instance".into())?;
    Ok(format!("{} balanced reduced configurations: permanent3(triadjacency) = P_Δ' exactly", s.balanced.len()))
}

fn c4_kasteleyn_matrix() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut total = 0;
    for i in 0..120 {
        let n = rng.gen_range(1..=4);
        let (lo, hi) = if i % 2 == 0 { (0, 1) } else { (-3, 3) };
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect()).collect();
        let m = SquareMatrix::from_i64(&rows).unwrap();
        let tc = build_t(&m).map_err(|e| e.to_string())?;
        let per = naive_per2(m.rows());
        let ryser = permanent2(m.rows()).unwrap();
        let per3 = permanent3(tc.tensor(), Exec::Parallel);
        let det3 = determinant3(tc.tensor(), Exec::Parallel);
        ensure(ryser == per && per3 == per && det3 == per, || {
            format!("{rows:?}: Per(M) = {per}, Ryser = {ryser}, Per(A) = {per3}, det(A) = {det3}")
        })?;
        ensure(tc.side() <= n * n + 2 * n, || format!("{rows:?}: m = {}", tc.side()))?;
        let r = certify_trivial_signing(&tc, Exec::Sequential).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("{rows:?}: negative term {:?}", r.witness))?;
        total += 1;
    }
    Ok(format!("{total} random matrices (n ≤ 4, 0/1 and [-3,3]): Per(M) = Per(A) = det(A), m ≤ n²+2n, every contributing sign +1"))
}

fn c5_signed_determinant() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut found = 0;
    let mut tried = 0;
    while found < 25 && tried < 2000 {
        tried += 1;
        let n = rng.gen_range(1..=3);
        let mut t = Tensor3::cube(n);
        for _ in 0..rng.gen_range(n..=2 * n * n) {
            let idx = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
            t.set(idx, BigInt::from(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 })).unwrap();
        }
        let pg = projection_graphs(&t);
        let (Some(s1), Some(s2)) = (
            find_pfaffian_signing(&pg.g1).map_err(|e| e.to_string())?,
            find_pfaffian_signing(&pg.g2).map_err(|e| e.to_string())?,
        ) else {
            continue;
        };
        let (per, _) = naive_per_det3(&t);
        if per == BigInt::from(0) {
            continue;
        }
        let signed = apply_signing(&t, &s1, &s2).map_err(|e| e.to_string())?;
        let (_, det) = naive_per_det3(&signed);
        ensure(det == per, || format!("tensor {t:?}: det(A') = {det}, Per(A) = {per}"))?;
        found += 1;
    }
    ensure(found >= 20, || format!("only {found} signable tensors in {tried} draws"))?;
    Ok(format!("{found} random signable sparse tensors (n ≤ 3, Per ≠ 0): det(A') = Per(A) exactly"))
}

fn c6_binet_cauchy() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..120 {
        let r = rng.gen_range(1..=3);
        let n = rng.gen_range(r..=5);
        let mut mat = || -> Vec<Vec<i64>> { (0..r).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect() };
        let (a, b, c) = (mat(), mat(), mat());
        let t = RectMatrixTriple::from_i64([&a, &b, &c]).unwrap();
        let lhs = determinant3(&binet_cauchy_c(&t), Exec::Sequential);
        let rhs = binet_cauchy_rhs(&t).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("triple {i} (r = {r}, n = {n}): {lhs} ≠ {rhs}"))?;
    }
    Ok("120 random integer triples (r ≤ 3, n ≤ 5): determinant3(C) = Σ Per·det·det exactly".into())
}

fn c7_lattice() -> Verdict {
    let mut parts = Vec::new();
    for ([a, b, c], want) in [([2, 1, 1], 1), ([2, 2, 1], 2), ([2, 2, 2], 9)] {
        let q = cubic_lattice(a, b, c);
        let w = EdgeWeights::new();
        let direct = dimer_polynomial_direct(&q, &w, Exec::Sequential).map_err(|e| e.to_string())?.eval_one();
        let tensor = dimer_polynomial_tensor(&q, &w, Exec::Parallel).map_err(|e| e.to_string())?.eval_one();
        // Independent brute force: every edge subset of the box graph.
        let edges: Vec<(usize, usize)> = q.graph().edges().collect();
        let brute = (0u32..1 << edges.len())
            .filter(|mask| {
                let chosen: Vec<&(usize, usize)> =
                    edges.iter().enumerate().filter(|(e, _)| mask >> e & 1 == 1).map(|(_, x)| x).collect();
                let l: BTreeSet<usize> = chosen.iter().map(|e| e.0).collect();
                let r: BTreeSet<usize> = chosen.iter().map(|e| e.1).collect();
                chosen.len() * 2 == q.n_vertices() && l.len() == chosen.len() && r.len() == chosen.len()
            })
            .count();
        ensure(direct == want.into() && tensor == want.into() && brute == want, || {
            format!("{a}×{b}×{c}: direct {direct}, tensor {tensor}, brute force {brute}, expected {want}")
        })?;
        parts.push(format!("{a}×{b}×{c} → {want}"));
    }
    Ok(format!("{} (direct = tensor pipeline = brute force)", parts.join(", ")))
}

fn c8_codes() -> Verdict {
    let code = BinaryCode::new(3, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
    let w = weight_enumerator(&code, Exec::Sequential).map_err(|e| e.to_string())?.to_string();
    ensure(w == "1 + 3*x^2", || format!("[3,2] even-weight code: {w}"))?;
    let tet = TriangularConfiguration::from_faces(&[
        ("a", ["0", "1", "2"]),
        ("b", ["0", "1", "3"]),
        ("c", ["0", "2", "3"]),
        ("d", ["1", "2", "3"]),
    ]);
    let k = cycle_space_weight_enumerator(&tet, 2, Exec::Sequential).map_err(|e| e.to_string())?.to_string();
    ensure(k == "1 + x^4", || format!("tetrahedron kernel: {k}"))?;
    let f = fold_enumerator(&"1 + x^6".parse().unwrap(), 4).map_err(|e| e.to_string())?;
    ensure(f == "1 + x".parse().unwrap(), || format!("fold(1 + x^6, 4) = {f}"))?;
    let odd = fold_enumerator(&"1 + x^5".parse().unwrap(), 4);
    ensure(matches!(odd, Err(Error::OddResidue { .. })), || format!("fold(1 + x^5, 4) = {odd:?}"))?;
    Ok("1 + 3*x^2; tetrahedron over GF(2) 1 + x^4; fold(1 + x^6, 4) = 1 + x; odd residue rejected".into())
}

fn c9_determinism() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_kas3");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let file = |name: &str, text: &str| -> String {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let config = file(
        "bowtie.json",
        r#"{"triangles":[{"id":"s","edges":["a","b","c"]},{"id":"t","edges":["c","d","e"]}],
            "edges":[{"id":"a"},{"id":"b"},{"id":"c"},{"id":"d"},{"id":"e"}],"weights":{"s":2,"t":1}}"#,
    );
    let single = file(
        "single.json",
        r#"{"triangles":[{"id":"t","edges":["a","b","c"]}],"edges":[{"id":"a"},{"id":"b"},{"id":"c"}],"weights":{"t":2}}"#,
    );
    let tensor = file(
        "t.json",
        r#"{"dims":[3,3,3],"entries":[[0,0,0,1],[0,1,1,2],[1,1,2,-1],[1,0,1,3],[2,2,1,1],[2,2,0,2],[1,2,2,1],[2,0,2,1]]}"#,
    );
    let matrix = file("m.json", r#"{"n":3,"rows":[[1,2,0],[0,1,-1],[3,0,1]]}"#);
    let code = file("c.json", r#"{"k":2,"n":4,"rows":[[1,1,0,0],[0,1,1,1]]}"#);
    let off = dir.path().join("q.off").display().to_string();
    let reduced = {
        let out = Command::new(bin).args(["--json", "reduce", &single]).output().map_err(|e| e.to_string())?;
        file("reduced.json", std::str::from_utf8(&out.stdout).unwrap())
    };
    let commands: Vec<Vec<&str>> = vec![
        vec!["gadget", "tunnel", "--certify"],
        vec!["gadget", "s5", "--certify"],
        vec!["gadget", "mtt", "--certify"],
        vec!["reduce", &config],
        vec!["per3", &tensor],
        vec!["det3", &tensor],
        vec!["triadj", &reduced],
        vec!["kasteleyn", "build", &matrix, "--certify"],
        vec!["sign-k1", &tensor],
        vec!["lattice", "2", "2", "2", "--dimers"],
        vec!["lattice", "2", "2", "1", "--export-off", &off],
        vec!["code", "wenum", &code],
        vec!["fold", "1 + 2*x^6 + x^8", "--e", "4"],
        vec!["kernel-wenum", &config, "--p", "3"],
        vec!["bc-check", "--r", "3", "--n", "5", "--seed", "11"],
    ];
    let mut runs = 0;
    for args in &commands {
        for json in [false, true] {
            let mut outputs = Vec::new();
            for threads in ["1", "1", "4"] {
                let mut cmd = Command::new(bin);
                if json {
                    cmd.arg("--json");
                }
                let out = cmd.args(["--threads", threads]).args(args).output().map_err(|e| e.to_string())?;
                ensure(out.status.success(), || format!("{args:?} failed: {}", String::from_utf8_lossy(&out.stderr)))?;
                let mut bytes = out.stdout;
                if args.contains(&"--export-off") {
                    bytes.extend(std::fs::read(&off).map_err(|e| e.to_string())?);
                }
                outputs.push(bytes);
                runs += 1;
            }
            ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
                format!("{args:?} (json = {json}) differs across runs or thread counts")
            })?;
        }
    }
    Ok(format!(
        "{} commands × text/json × (threads 1, 1, 4): {runs} runs, byte-identical per command",
        commands.len()
    ))
}

fn main() {
    // libtest-style flags (e.g. `--nocapture`) are accepted and ignored.
    let started = Instant::now();
    let mut failed = 0;
    let mut report = |n: u32, title: &str, f: &dyn Fn() -> Verdict| {
        let t = Instant::now();
        let v = f();
        let secs = t.elapsed().as_secs_f64();
        match v {
            Ok(detail) => println!("[PASS] {n}. {title} (tolerance: exact; {secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {n}. {title} (tolerance: exact; {secs:.2}s): {why}");
            }
        }
    };
    report(1, "gadget suites", &c1_gadgets);
    let s = sweep();
    report(2, "reduction soundness", &|| c2_reduction(&s));
    report(3, "triadjacency permanent", &|| c3_triadjacency(&s));
    report(4, "permanent-preserving 3-matrix", &c4_kasteleyn_matrix);
    report(5, "signed determinant equals permanent", &c5_signed_determinant);
    report(6, "3-matrix Binet-Cauchy", &c6_binet_cauchy);
    report(7, "lattice dimer counts", &c7_lattice);
    report(8, "codes and fold", &c8_codes);
    report(9, "CLI determinism", &c9_determinism);
    println!(
        "acceptance: {} of 9 criteria passed in {:.1}s",
        9 - failed,
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
