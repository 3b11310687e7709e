//! Kernel transform values against an independently computed grid
//! (40-digit arithmetic, direct principal-value quadrature).

use entspec::special::{g_kernel, h_kernel, KernelConfig};

fn cfg() -> KernelConfig {
    KernelConfig::default()
}

fn check_h(x: f64, alpha: f64, q: f64, want: f64, tol: f64) {
    let got = h_kernel(x, alpha, q, &cfg()).unwrap();
    assert!(
        (got - want).abs() <= tol * want.abs().max(1.0),
        "h({x}, {alpha}, {q}) = {got:.17e}, want {want:.17e}"
    );
}

fn check_g(alpha: f64, q: f64, want: f64, tol: f64) {
    let got = g_kernel(alpha, q, &cfg()).unwrap();
    assert!(
        (got - want).abs() <= tol * want.abs().max(1.0),
        "g({alpha}, {q}) = {got:.17e}, want {want:.17e}"
    );
}

const X_GRID: [f64; 6] = [-1.0, -0.999, -0.5, 0.0, 0.7, 1.0];

struct Block {
    alpha: f64,
    q: f64,
    h: [f64; 6],
    g: f64,
}

const GRID: [Block; 12] = [
    Block {
        alpha: 1.0,
        q: 1.5,
        h: [
            -0.79957824512385857,
            -0.79128980596992180,
            0.32693329831074428,
            0.52198882724028954,
            0.023782734760532836,
            -0.40084350975228285,
        ],
        g: -0.039662596099086859,
    },
    Block {
        alpha: 1.5,
        q: 1.5,
        h: [
            -0.056394841663768645,
            -0.054597646986783194,
            0.45760913785895150,
            0.41458534947765185,
            -0.30234592147035557,
            -0.80139239082350149,
        ],
        g: 0.20633567957812761,
    },
    Block {
        alpha: 1.0,
        q: 2.5,
        h: [
            -0.34655419869969562,
            -0.34548529530168559,
            0.20793468435209509,
            0.49410874371373423,
            0.0069226843312729876,
            -0.61378320520121752,
        ],
        g: 0.032509487200347863,
    },
    Block {
        // Just below the representation crossover: panel quadrature.
        alpha: 1.000015,
        q: 2.5,
        h: [
            -0.34654519518018082,
            -0.34547624479802656,
            0.20794463635895023,
            0.49411265861085844,
            0.0069123626591559971,
            -0.61380121157818300,
        ],
        g: 0.032516689764638197,
    },
    Block {
        // Just above the crossover: spectral sums at high order.
        alpha: 1.00006,
        q: 2.5,
        h: [
            -0.34651818090703398,
            -0.34544909115003795,
            0.20797449246499182,
            0.49412440307330432,
            0.0068813971312945734,
            -0.61385523131676840,
        ],
        g: 0.032538297862610032,
    },
    Block {
        alpha: 1.0,
        q: 0.75,
        h: [
            -3.4862370052080822,
            -2.4807983936623731,
            0.58067257631541420,
            0.61330206353312326,
            0.078111723568020487,
            -0.25688149739595889,
        ],
        g: -0.13892485863088064,
    },
    Block {
        alpha: 2.0,
        q: 0.75,
        h: [
            0.32987535127946211,
            0.33068329311134843,
            0.45214936450485412,
            0.21699088812168945,
            -0.43674467529144093,
            -0.79371464571066542,
        ],
        g: 0.30036245310072404,
    },
    Block {
        alpha: 1.0,
        q: 3.0,
        h: [
            -0.25000000000000000,
            -0.24924950050000000,
            0.18750000000000000,
            0.50000000000000000,
            0.013500000000000000,
            -0.75000000000000000,
        ],
        g: 0.062500000000000000,
    },
    Block {
        alpha: 1.0,
        q: 1.0,
        h: [
            -1.6931471805599453,
            -1.5539925338238142,
            0.46722577395424520,
            0.57079632679489662,
            0.053231408182638668,
            -0.30685281944005469,
        ],
        g: -0.096573590279972655,
    },
    Block {
        alpha: 1.5,
        q: 1.0,
        h: [
            -0.11268954169084357,
            -0.11049007186388255,
            0.42494958457585375,
            0.34776164497686121,
            -0.26766772319540030,
            -0.65124248080936674,
        ],
        g: 0.17111274321720966,
    },
    Block {
        alpha: 2.0,
        q: 3.7,
        h: [
            1.0392306675029260,
            1.0407477092832525,
            1.6886694087760858,
            1.6446924369515674,
            -1.3627904651329322,
            -4.4095745738696911,
        ],
        g: 1.1903716015006540,
    },
    Block {
        alpha: 1.2,
        q: 10.0,
        h: [
            2.7851681868888889,
            2.7870220745012664,
            4.1147538109444444,
            7.6759946744444444,
            12.368400401077778,
            -49.335560646888889,
        ],
        g: 4.8627818084444444,
    },
];

#[test]
fn transform_grid() {
    for b in &GRID {
        for (x, want) in X_GRID.iter().zip(b.h.iter()) {
            check_h(*x, b.alpha, b.q, *want, 2e-9);
        }
        check_g(b.alpha, b.q, b.g, 2e-9);
    }
}

#[test]
fn polynomial_exponents_have_closed_forms() {
    // q = 2: h(x) = 1/2 - x^2 - (alpha - 1) x, any finite alpha.
    // q = 3: h(x) = (x/2 - x^3 + 2 alpha (1/2 - x^2) - (alpha^2 - 1) x) / 2.
    for &alpha in &[0.3, 1.0, 1.7, 5.0] {
        for k in 0..=20 {
            let x = -1.0 + 0.1 * k as f64;
            let h2 = 0.5 - x * x - (alpha - 1.0) * x;
            check_h(x, alpha, 2.0, h2, 1e-12);
            let h3 = 0.5 * (0.5 * x - x * x * x + 2.0 * alpha * (0.5 - x * x)
                - (alpha * alpha - 1.0) * x);
            check_h(x, alpha, 3.0, h3, 1e-12);
        }
    }
}

#[test]
fn rejects_points_outside_the_interval() {
    assert!(h_kernel(1.2, 1.5, 1.5, &cfg()).is_err());
    assert!(h_kernel(-1.0000001, 1.5, 1.5, &cfg()).is_err());
}

#[test]
fn rejects_fractional_exponent_below_alpha_one() {
    assert!(g_kernel(0.9, 1.5, &cfg()).is_err());
    assert!(g_kernel(0.9, 3.0, &cfg()).is_ok());
}
