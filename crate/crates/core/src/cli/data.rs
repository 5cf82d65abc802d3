//! Published reference data: the worked `F_25` example and the table of
//! fourteen quantum codes. Polynomials are kept in their printed notation and
//! parsed at run time.

/// The worked example over `F_25 = F_5(t)`, `t^2 = t + 3`, `n = 12`, `δ = 1 - 2v^2`.
pub mod example1 {
    pub const P: u32 = 5;
    pub const M: usize = 2;
    /// `x^2 - x - 3`, ascending.
    pub const MODULUS: [u32; 3] = [2, 4, 1];
    pub const N: usize = 12;
    pub const DELTA: &str = "1-2v^2";
    pub const LAMBDAS: [i64; 3] = [1, -1, -1];

    /// Factors of `x^12 - 1`, in printed order.
    pub const X12_MINUS_1: [&str; 8] = [
        "x^2 + (3t + 2)x + 2t + 1",
        "x^2 + 3t + 3",
        "x^2 + 2t + 1",
        "x + t + 1",
        "x + 2t + 1",
        "x + 2t + 2",
        "x + t + 3",
        "x^2 + (2t + 3)x + 3t + 3",
    ];

    /// First factorisation of `x^12 + 1`; the squared factor is listed twice.
    pub const X12_PLUS_1_A: [&str; 8] = [
        "x^2 + t + 1",
        "x^2 + 4t + 2",
        "x^2 + 4t + 4",
        "x^2 + t + 3",
        "x + 4t",
        "x + 4t + 1",
        "x + 4t + 3",
        "x + 4t + 3",
    ];

    /// Second factorisation of `x^12 + 1`.
    pub const X12_PLUS_1_B: [&str; 8] = [
        "x^2 + t + 1",
        "x^2 + 4t + 2",
        "x^2 + 4t + 4",
        "x^2 + t + 3",
        "x + 3t",
        "x + t + 4",
        "x + t",
        "x + 3t + 2",
    ];

    pub const F: [&str; 3] = ["x^2 + (2t + 3)x + 3t + 3", "x + 4t + 3", "x + 3t + 2"];

    pub const H: [&str; 3] = [
        "x^{10} + (3t + 2)x^9 + 2tx^8 + (2t + 3)x^7 + (3t + 4)x^6 + x^4 + (3t + 2)x^3 + 2tx^2 + (2t + 3)x + 3t + 4",
        "x^{11} + (4t + 3)x^{10} + 3x^9 + (2t + 4)x^8 + 4x^7 + (t + 2)x^6 + 2x^5 + (3t + 1)x^4 + x^3 + (4t + 3)x^2 + 3x + 2t + 4",
        "x^{11} + 3tx^{10} + 3x^9 + 4tx^8 + 4x^7 + 2tx^6 + 2x^5 + tx^4 + x^3 + 3tx^2 + 3x + 4t",
    ];

    pub const H_STAR: [&str; 3] = [
        "(3t + 4)x^{10} + 3tx^9 + 2tx^8 + 2tx^7 + x^6 + (3t + 4)x^4 + 3tx^3 + 2tx^2 + 2tx + 1",
        "(3t + 1)x^{11} + 3x^{10} + (t + 2)x^9 + x^8 + (2t + 4)x^7 + 2x^6 + (4t + 3)x^5 + 4x^4 + (3t + 1)x^3 + 3x^2 + (t + 2)x + 1",
        "(t + 4)x^{11} + 3x^{10} + (2t + 3)x^9 + x^8 + (4t + 1)x^7 + 2x^6 + (3t + 2)x^5 + 4x^4 + (t + 4)x^3 + 3x^2 + (2t + 3)x + 1",
    ];

    /// `h_i* h_i = quotient_i · (x^12 - λ_i)`.
    pub const QUOTIENTS: [&str; 3] = [
        "(3t + 4)x^8 + (2t + 1)x^6 + (3t + 4)x^2 + 2t + 1",
        "(3t + 1)x^{10} + 4x^9 + (2t + 4)x^8 + (2t + 4)x^6 + x^5 + (3t + 1)x^4 + (3t + 1)x^2 + 4x + 2t + 4",
        "(t + 4)x^{10} + (3t + 1)x^9 + 4tx^8 + (4t + 1)x^6 + (2t + 4)x^5 + tx^4 + (t + 4)x^2 + (3t + 1)x + 4t",
    ];

    pub const GRAY_PRESET: &str = "ref-5-2";
    pub const GRAY_ALPHA: i64 = 4;
    pub const GRAY_PARAMS: (usize, usize, usize) = (36, 32, 3);
    pub const QUANTUM: (usize, usize, usize) = (36, 28, 3);
}

/// One row of the published table.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub n: usize,
    pub p: u32,
    pub m: usize,
    pub delta: &'static str,
    pub lambdas: [i64; 3],
    /// Ascending coefficient strings.
    pub f: [&'static str; 3],
    pub gray: (usize, usize, usize),
    pub quantum: (usize, usize, usize),
}

const fn row(
    n: usize,
    p: u32,
    delta: &'static str,
    lambdas: [i64; 3],
    f: [&'static str; 3],
    gray: (usize, usize, usize),
    quantum: (usize, usize, usize),
) -> TableRow {
    TableRow { n, p, m: 2, delta, lambdas, f, gray, quantum }
}

pub const TABLE: [TableRow; 14] = [
    row(12, 3, "1", [1, 1, 1], ["11", "(t)1", "(2t+1)1"], (36, 33, 3), (36, 30, 3)),
    row(6, 5, "-1", [-1, -1, -1], ["1(4t+3)1", "21", "31"], (18, 14, 4), (18, 10, 4)),
    row(10, 5, "1", [1, 1, 1], ["(3t+4)1", "1(t+3)1", "(3t+3)1"], (30, 26, 3), (30, 22, 3)),
    row(12, 5, "1-2v^2", [1, -1, -1], ["(3t+3)(2t+3)1", "(4t+3)1", "(3t+2)1"], (36, 32, 3), (36, 28, 3)),
    row(8, 7, "1-2v^2", [1, -1, -1], ["(t+3)1", "(5t+6)(2t+2)1", "(t+3)(3t+6)1"], (24, 19, 4), (24, 14, 4)),
    row(14, 7, "2v^2-1", [-1, 1, 1], ["(5t+4)1", "(t+3)1", "(2t+1)(3t)1"], (42, 38, 3), (42, 34, 3)),
    row(14, 7, "2v^2-1", [-1, 1, 1], ["(5t+4)1", "(t+3)1", "(2t+1)1"], (42, 39, 2), (42, 36, 2)),
    row(18, 7, "1-2v^2", [1, -1, -1], ["(3t+2)1", "(5t+2)1", "(6t)1"], (54, 51, 3), (54, 48, 3)),
    row(10, 11, "1-2v^2", [1, -1, -1], ["(5t+9)(9t+2)1", "(7t+4)1", "(3t+8)1"], (30, 26, 3), (30, 22, 3)),
    row(16, 11, "1", [1, 1, 1], ["(4t+3)1", "(10t+1)(9t+7)1", "(5t+8)(7t+4)1"], (48, 43, 4), (48, 38, 4)),
    row(20, 11, "2v^2-1", [-1, 1, 1], ["(7t+10)(4t+9)1", "(8t+7)1", "(2t+7)(t)1"], (60, 55, 3), (60, 50, 3)),
    row(4, 13, "-1", [-1, -1, -1], ["(12t+11)1", "(9t+6)1", "(t+6)1"], (12, 9, 4), (12, 6, 4)),
    row(6, 13, "-1", [-1, -1, -1], ["(t+11)1", "81", "(2t+8)1"], (18, 15, 4), (18, 12, 4)),
    row(8, 13, "2v^2-1", [-1, 1, 1], ["(2t+11)(7t+3)1", "(t+10)1", "(5t+4)1"], (24, 20, 3), (24, 16, 3)),
];
