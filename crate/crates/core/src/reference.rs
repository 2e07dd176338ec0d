//! Reference values, kept as plain data.
//!
//! Grid cells use `"inf"` for the projective infinity. `ψ` values at the
//! nodal point are pairs `(a, b)` meaning `a + b·θ` with `θ² = −3/4`.

/// `ψn` at `x = −1` on `y² = x²(x + 1/4)`, `n = 0..=12`, branch `y = +θ`.
pub const PSI_AT_MINUS_ONE: [(i64, i64); 13] = [
    (0, 0),
    (1, 0),
    (0, -2),
    (2, 0),
    (0, -2),
    (1, 0),
    (0, 0),
    (-1, 0),
    (0, 2),
    (-2, 0),
    (0, 2),
    (-1, 0),
    (0, 0),
];

pub struct UGridRef {
    pub pq: (i64, i64),
    pub delta2: &'static str,
    pub cd: &'static str,
    /// Rows `j = 0..=3`, columns `i = 0..=3`.
    pub rows: [[&'static str; 4]; 4],
}

pub const U_GRIDS: [UGridRef; 2] = [
    UGridRef {
        pq: (3, 2),
        delta2: "-3/4",
        cd: "1/4",
        rows: [
            ["inf", "0", "inf", "0"],
            ["1/3", "3", "1/3", "3"],
            ["1/3", "3", "1/3", "3"],
            ["inf", "0", "inf", "0"],
        ],
    },
    UGridRef {
        pq: (2, 3),
        delta2: "-4/3",
        cd: "1/3",
        rows: [
            ["inf", "0", "0", "inf"],
            ["1/4", "-2", "-2", "1/4"],
            ["inf", "0", "0", "inf"],
            ["1/4", "-2", "-2", "1/4"],
        ],
    },
];

/// `val ψn`, `n = 0..=12`, at the branch points `x³ + 1/4 = 0`.
pub const G_CUBIC_QUARTER: [&str; 13] = [
    "inf", "0", "1", "0", "1", "0", "1", "0", "1", "0", "1", "0", "1",
];

/// `val ψn`, `n = 0..=12`, at `x = 0` on `y² = x³ − x`.
pub const G_CUBIC_MINUS_X: [&str; 13] = [
    "inf", "0", "1", "4", "5", "8", "13", "16", "21", "28", "33", "40", "49",
];

pub struct FGridRef {
    pub pq: (i64, i64),
    pub d: i64,
    pub val_cd: i64,
    /// First column index; rows start at `j = 0`.
    pub i_start: i64,
    pub rows: &'static [&'static [&'static str]],
}

pub const F_GRID_3_2: FGridRef = FGridRef {
    pq: (3, 2),
    d: -2,
    val_cd: 0,
    i_start: 1,
    rows: &[
        &["inf", "-2", "2", "-2", "2"],
        &["2", "-2", "2", "-2", "2"],
        &["2", "-2", "2", "-2", "2"],
        &["2", "-2", "2", "-2", "2"],
    ],
};

pub const F_GRID_5_2: FGridRef = FGridRef {
    pq: (5, 2),
    d: 14,
    val_cd: 0,
    i_start: 1,
    rows: &[
        &["inf", "18", "14", "18"],
        &["18", "14", "18", "18"],
        &["14", "18", "18", "14"],
    ],
};
