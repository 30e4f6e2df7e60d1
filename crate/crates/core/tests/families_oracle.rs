use upkernel::constructors::{directed_cycle, directed_path};
use upkernel::families::*;
use upkernel::{count_up_color_kernels, gen, is_up_color_kernel, ColoredDigraph, FamilyDecision};

fn agree(d: &ColoredDigraph, fd: &FamilyDecision) -> bool {
    let count = count_up_color_kernels(d).unwrap();
    assert_eq!(fd.verdict, count > 0, "verdict {fd:?} vs oracle count {count} on {d:?}");
    if let Some(w) = &fd.witness {
        assert!(is_up_color_kernel(d, w).unwrap());
    }
    fd.verdict
}

// Guards against a sampler that only ever produces one verdict.
fn both_verdicts(positives: usize, total: usize) {
    assert!(positives >= total / 20 && total - positives >= total / 20, "{positives} of {total} positive");
}

fn all_colorings(n: usize, max: u64) -> impl Iterator<Item = Vec<u64>> {
    let base = max + 1;
    (0..base.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let c = code % base;
                code /= base;
                c
            })
            .collect()
    })
}

#[test]
fn path_matches_oracle_exhaustively() {
    for n in 1..=5 {
        let p = directed_path(n).unwrap();
        for c in all_colorings(n, 3) {
            let d = p.with_colors(c).unwrap();
            agree(&d, &decide_path(&d).unwrap());
        }
    }
}

#[test]
fn cycle_matches_oracle_exhaustively() {
    for n in 2..=5 {
        let cyc = directed_cycle(n).unwrap();
        for c in all_colorings(n, 3) {
            let d = cyc.with_colors(c).unwrap();
            agree(&d, &decide_even_cycle(&d).unwrap());
        }
    }
}

#[test]
fn forest_matches_oracle() {
    let mut rng = gen::rng(11);
    let mut positives = 0;
    for i in 0..1000 {
        let n = 1 + i % 9;
        let d = gen::forest(&mut rng, n, 0.85, n as u64);
        positives += agree(&d, &decide_forest(&d).unwrap()) as usize;
        let lv = level_forest(&d).unwrap();
        assert!(upkernel::is_independent(&d, &lv.even_leveled()).unwrap());
    }
    both_verdicts(positives, 1000);
}

#[test]
fn wheel_matches_oracle() {
    let mut rng = gen::rng(12);
    let mut positives = 0;
    for i in 0..1000 {
        let rim = 3 + i % 6;
        let d = gen::wheel_instance(&mut rng, rim, 4);
        positives += agree(&d, &decide_wheel(&d).unwrap()) as usize;
    }
    both_verdicts(positives, 1000);
}

#[test]
fn pendant_matches_oracle() {
    let mut rng = gen::rng(13);
    let mut positives = 0;
    for i in 0..1000 {
        let nh = 1 + i % 6;
        let (d, h, p) = gen::pendant_instance(&mut rng, nh, 1 + i % 3, 4);
        positives += agree(&d, &decide_pendant(&d, &h, &p).unwrap()) as usize;
    }
    both_verdicts(positives, 1000);
}

#[test]
fn chord_matches_oracle() {
    let mut rng = gen::rng(14);
    let mut positives = 0;
    for i in 0..1000 {
        let n = [5, 7, 9][i % 3];
        let d = gen::chord_instance(&mut rng, n, 0.3, 5);
        positives += agree(&d, &decide_odd_cycle_chord(&d).unwrap()) as usize;
    }
    both_verdicts(positives, 1000);
}

#[test]
fn tournament_matches_oracle() {
    let mut rng = gen::rng(15);
    let mut positives = 0;
    for i in 0..1000 {
        let n = 1 + i % 9;
        let d = gen::tournament_instance(&mut rng, n, 0.25, 4);
        positives += agree(&d, &decide_tournament(&d).unwrap()) as usize;
    }
    both_verdicts(positives, 1000);
}
