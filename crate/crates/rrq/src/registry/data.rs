//! Term-list constants for the larger catalog entries.
//!
//! `RTerm` encodes `c * q^e * R(q)^a * R(q^s)^b` where the companion index
//! `s` (3 or 4) is supplied by the consuming record. `EtaTerm` encodes
//! `c * q^e * prod E_n^p / prod E_n^p`.

pub(crate) type RTerm = (i64, u32, i32, i32);
pub(crate) type EtaTerm = (
    i64,
    u32,
    &'static [(u32, u32)],
    &'static [(u32, u32)],
);

pub(crate) const BR_3COREGENEVE1: &[RTerm] = &[
    (3, 0, 1, 3),
    (-3, 0, 4, 2),
    (1, 1, -4, 3),
    (9, 1, -1, 2),
    (25, 2, 0, 0),
    (-9, 3, 1, -2),
    (-1, 3, 4, -3),
    (-3, 4, -4, -2),
    (3, 4, -1, -3),
];

pub(crate) const BR_COLGEN1EVE1_PRINTED: &[RTerm] = &[
    (1, 0, -4, 3),
    (1, 0, 3, 4),
    (2, 1, -2, 4),
    (3, 1, 1, 3),
    (2, 1, 4, 2),
    (-6, 2, -1, 2),
    (6, 2, 2, 1),
    (-3, 3, -3, 1),
    (25, 3, 0, 0),
    (-3, 3, 3, -1),
    (-6, 4, -2, -1),
    (6, 4, 1, -2),
    (-1, 4, 4, -3),
    (2, 5, -4, -2),
    (3, 5, -1, -3),
    (2, 5, 2, -4),
    (-1, 6, -3, -4),
];

pub(crate) const BR_COLGEN1EVE1_CORRECTED: &[RTerm] = &[
    (1, 0, 3, 4),
    (2, 1, -2, 4),
    (3, 1, 1, 3),
    (2, 1, 4, 2),
    (1, 2, -4, 3),
    (-6, 2, -1, 2),
    (6, 2, 2, 1),
    (-3, 3, -3, 1),
    (25, 3, 0, 0),
    (-3, 3, 3, -1),
    (-6, 4, -2, -1),
    (6, 4, 1, -2),
    (-1, 4, 4, -3),
    (2, 5, -4, -2),
    (3, 5, -1, -3),
    (2, 5, 2, -4),
    (-1, 6, -3, -4),
];

pub(crate) const BR_P1232_PRINTED: &[RTerm] = &[
    (1, 0, 6, 8),
    (4, 1, 1, 8),
    (8, 1, 4, 7),
    (2, 1, 7, 6),
    (4, 2, -4, 8),
    (-8, 2, -1, 7),
    (27, 2, 2, 6),
    (20, 2, 5, 5),
    (4, 2, 8, 4),
    (2, 3, -6, 7),
    (-16, 3, -3, 6),
    (30, 3, 0, 5),
    (64, 3, 3, 4),
    (16, 3, 6, 3),
    (1, 4, -8, 6),
    (-20, 4, -5, 5),
    (108, 4, -2, 4),
    (64, 4, 1, 3),
    (108, 4, 4, 2),
    (8, 4, 7, 1),
    (-8, 5, -7, 4),
    (64, 5, -4, 3),
    (-108, 5, -1, 2),
    (108, 5, 2, 1),
    (30, 5, 5, 0),
    (-4, 5, 8, -1),
    (27, 6, -6, 2),
    (-64, 6, -3, 1),
    (45, 6, 0, 0),
    (-64, 6, 3, -1),
    (27, 6, 6, -2),
    (4, 7, -8, 1),
    (-30, 7, -5, 0),
    (-108, 7, -2, -1),
    (108, 7, 1, -2),
    (-64, 7, 4, -3),
    (8, 7, 7, -4),
    (8, 8, -7, -1),
    (108, 8, -4, -2),
    (64, 8, -1, -3),
    (108, 8, 2, -4),
    (1, 8, 2, 0),
    (-20, 8, 5, -5),
    (-16, 9, -6, -3),
    (-64, 9, -3, -4),
    (-30, 9, 0, -5),
    (16, 9, 3, -6),
    (-2, 9, 6, -7),
    (4, 10, -8, -4),
    (20, 10, -5, -5),
    (27, 10, -2, -6),
    (-8, 10, 1, -7),
    (4, 10, 4, -8),
    (-2, 11, -7, -6),
    (-8, 11, -4, -7),
    (-4, 11, -1, -8),
    (1, 12, -6, -8),
];

pub(crate) const BR_P1232_CORRECTED: &[RTerm] = &[
    (1, 0, 6, 8),
    (4, 1, 1, 8),
    (8, 1, 4, 7),
    (2, 1, 7, 6),
    (4, 2, -4, 8),
    (-8, 2, -1, 7),
    (27, 2, 2, 6),
    (20, 2, 5, 5),
    (4, 2, 8, 4),
    (2, 3, -6, 7),
    (-16, 3, -3, 6),
    (30, 3, 0, 5),
    (64, 3, 3, 4),
    (16, 3, 6, 3),
    (1, 4, -8, 6),
    (-20, 4, -5, 5),
    (108, 4, -2, 4),
    (64, 4, 1, 3),
    (108, 4, 4, 2),
    (8, 4, 7, 1),
    (-8, 5, -7, 4),
    (64, 5, -4, 3),
    (-108, 5, -1, 2),
    (108, 5, 2, 1),
    (30, 5, 5, 0),
    (-4, 5, 8, -1),
    (27, 6, -6, 2),
    (-64, 6, -3, 1),
    (45, 6, 0, 0),
    (-64, 6, 3, -1),
    (27, 6, 6, -2),
    (4, 7, -8, 1),
    (-30, 7, -5, 0),
    (-108, 7, -2, -1),
    (108, 7, 1, -2),
    (-64, 7, 4, -3),
    (8, 7, 7, -4),
    (8, 8, -7, -1),
    (108, 8, -4, -2),
    (64, 8, -1, -3),
    (108, 8, 2, -4),
    (-20, 8, 5, -5),
    (1, 8, 8, -6),
    (-16, 9, -6, -3),
    (-64, 9, -3, -4),
    (-30, 9, 0, -5),
    (16, 9, 3, -6),
    (-2, 9, 6, -7),
    (4, 10, -8, -4),
    (20, 10, -5, -5),
    (27, 10, -2, -6),
    (-8, 10, 1, -7),
    (4, 10, 4, -8),
    (-2, 11, -7, -6),
    (-8, 11, -4, -7),
    (-4, 11, -1, -8),
    (1, 12, -6, -8),
];

pub(crate) const BR_BETAEQ_CORE: &[RTerm] = &[
    (1, 0, 6, 3),
    (4, 1, 1, 3),
    (-12, 1, 4, 2),
    (4, 2, -4, 3),
    (10, 2, 5, 0),
    (-3, 3, -6, 2),
    (15, 3, 0, 0),
    (-3, 3, 6, -2),
    (-10, 4, -5, 0),
    (-4, 4, 4, -3),
    (-12, 5, -4, -2),
    (4, 5, -1, -3),
    (-1, 6, -6, -3),
];

pub(crate) const BR_BETAEQ_CORE_INNER: &[RTerm] = &[
    (1, 0, 6, 3),
    (4, 1, 1, 3),
    (-12, 1, 4, 2),
    (4, 2, -4, 3),
    (12, 2, -1, 2),
    (10, 2, 5, 0),
    (-3, 3, -6, 2),
    (15, 3, 0, 0),
    (-3, 3, 6, -2),
    (-10, 4, -5, 0),
    (-12, 4, 1, -2),
    (-4, 4, 4, -3),
    (-12, 5, -4, -2),
    (4, 5, -1, -3),
    (-1, 6, -6, -3),
];

pub(crate) const BR_BETAEQ_TAIL: &[RTerm] = &[
    (1, 0, -1, 2),
    (-1, 2, 1, -2),
];

pub(crate) const BR_REACH_R: &[RTerm] = &[
    (1, 0, 3, 4),
    (2, 1, -2, 4),
    (3, 1, 1, 3),
    (2, 1, 4, 2),
    (1, 2, -4, 3),
    (-6, 2, -1, 2),
    (6, 2, 2, 1),
    (-3, 3, -3, 1),
    (-3, 3, 3, -1),
    (-6, 4, -2, -1),
    (6, 4, 1, -2),
    (-1, 4, 4, -3),
    (2, 5, -4, -2),
    (3, 5, -1, -3),
    (2, 5, 2, -4),
    (-1, 6, -3, -4),
];

pub(crate) const BR_125N21_A_PRINTED: &[RTerm] = &[
    (1, 0, 3, 4),
    (-3, 3, -3, 1),
    (25, 3, 0, 0),
    (-3, 3, 3, -1),
    (-1, 6, -3, -4),
];

pub(crate) const BR_125N21_B_PRINTED: &[RTerm] = &[
    (3, 0, -2, 4),
    (-3, 0, 1, 3),
    (3, 0, 4, 2),
    (1, 1, -4, 3),
    (-3, 1, -1, 2),
    (3, 1, 2, 1),
    (-3, 3, -2, -1),
    (3, 3, 1, -2),
    (-1, 3, 4, -3),
    (3, 4, -4, -2),
    (-3, 4, -1, -3),
    (3, 4, 2, -4),
];

pub(crate) const BR_125N21_A_DERIVED: &[RTerm] = &[
    (1, 0, 3, 4),
    (-3, 1, -2, 4),
    (-9, 2, 2, 1),
    (-3, 3, -3, 1),
    (25, 3, 0, 0),
    (-3, 3, 3, -1),
    (9, 4, -2, -1),
    (-3, 5, 2, -4),
    (-1, 6, -3, -4),
];

pub(crate) const BR_125N21_B_DERIVED: &[RTerm] = &[
    (3, 1, 1, 3),
    (-3, 1, 4, 2),
    (1, 2, -4, 3),
    (9, 2, -1, 2),
    (25, 3, 0, 0),
    (-9, 4, 1, -2),
    (-1, 4, 4, -3),
    (-3, 5, -4, -2),
    (3, 5, -1, -3),
];

pub(crate) const BR_B_STEP: &[RTerm] = &[
    (3, 0, 1, 1),
    (1, 1, -4, 1),
    (-5, 1, 0, 0),
    (-1, 1, 4, -1),
    (3, 2, -1, -1),
];

pub(crate) const BR_C_STEP_PRINTED: &[RTerm] = &[
    (1, 0, 4, 4),
    (-3, 1, -1, 4),
    (-4, 1, 3, 3),
    (-8, 2, -2, 3),
    (8, 2, 2, -3),
    (4, 2, 2, 2),
    (-2, 3, -3, 2),
    (24, 3, 1, 1),
    (8, 4, -4, 1),
    (-25, 4, 0, 0),
    (-8, 4, 4, -1),
    (24, 5, -1, -1),
    (2, 5, 3, -2),
    (4, 6, -2, -2),
    (-4, 7, -3, -3),
    (3, 7, 1, -4),
    (1, 8, -4, -4),
];

pub(crate) const BR_C_STEP_CORRECTED: &[RTerm] = &[
    (1, 0, 4, 4),
    (-3, 1, -1, 4),
    (-4, 1, 3, 3),
    (-8, 2, -2, 3),
    (4, 2, 2, 2),
    (-2, 3, -3, 2),
    (24, 3, 1, 1),
    (8, 4, -4, 1),
    (-25, 4, 0, 0),
    (-8, 4, 4, -1),
    (24, 5, -1, -1),
    (2, 5, 3, -2),
    (4, 6, -2, -2),
    (8, 6, 2, -3),
    (-4, 7, -3, -3),
    (3, 7, 1, -4),
    (1, 8, -4, -4),
];

pub(crate) const RHS_COLORGEN1: &[EtaTerm] = &[
    (1, 0, &[(5, 5)], &[(1, 6), (15, 1)]),
    (10, 1, &[(5, 10)], &[(1, 7), (3, 5)]),
    (1, 2, &[(15, 5)], &[(3, 6), (5, 1)]),
    (45, 3, &[(5, 5), (15, 5)], &[(1, 6), (3, 6)]),
    (-90, 5, &[(15, 10)], &[(1, 5), (3, 7)]),
];

pub(crate) const RHS_COLORGEN2_PRINTED: &[EtaTerm] = &[
    (1, 0, &[(5, 10)], &[(1, 12), (15, 2)]),
    (20, 1, &[(5, 15)], &[(1, 13), (3, 5), (15, 1)]),
    (80, 2, &[(5, 20)], &[(1, 14), (3, 10)]),
    (12, 2, &[(5, 4), (15, 4)], &[(1, 6), (3, 6)]),
    (306, 3, &[(5, 10), (15, 4)], &[(1, 12), (3, 6)]),
    (-36, 3, &[(5, 9), (15, 5)], &[(1, 7), (3, 11)]),
    (1, 4, &[(15, 10)], &[(1, 12), (3, 2)]),
    (540, 4, &[(5, 15), (15, 5)], &[(1, 13), (3, 11)]),
    (306, 5, &[(5, 4), (15, 10)], &[(1, 6), (3, 12)]),
    (324, 5, &[(5, 5), (15, 9)], &[(1, 11), (3, 7)]),
    (4745, 6, &[(5, 10), (15, 10)], &[(1, 12), (3, 12)]),
    (-180, 7, &[(15, 15)], &[(1, 5), (3, 13), (5, 1)]),
    (-4860, 8, &[(5, 5), (15, 5)], &[(1, 11), (3, 13)]),
    (6480, 10, &[(15, 20)], &[(1, 10), (3, 14)]),
];

pub(crate) const RHS_COLORGEN2_CORRECTED: &[EtaTerm] = &[
    (1, 0, &[(5, 10)], &[(1, 12), (15, 2)]),
    (20, 1, &[(5, 15)], &[(1, 13), (3, 5), (15, 1)]),
    (80, 2, &[(5, 20)], &[(1, 14), (3, 10)]),
    (12, 2, &[(5, 4), (15, 4)], &[(1, 6), (3, 6)]),
    (306, 3, &[(5, 10), (15, 4)], &[(1, 12), (3, 6)]),
    (-36, 3, &[(5, 9), (15, 5)], &[(1, 7), (3, 11)]),
    (1, 4, &[(15, 10)], &[(3, 12), (5, 2)]),
    (540, 4, &[(5, 15), (15, 5)], &[(1, 13), (3, 11)]),
    (306, 5, &[(5, 4), (15, 10)], &[(1, 6), (3, 12)]),
    (324, 5, &[(5, 5), (15, 9)], &[(1, 11), (3, 7)]),
    (4745, 6, &[(5, 10), (15, 10)], &[(1, 12), (3, 12)]),
    (-180, 7, &[(15, 15)], &[(1, 5), (3, 13), (5, 1)]),
    (-4860, 8, &[(5, 5), (15, 15)], &[(1, 11), (3, 13)]),
    (6480, 10, &[(15, 20)], &[(1, 10), (3, 14)]),
];

pub(crate) const RHS_COLORGEN3: &[EtaTerm] = &[
    (25, 0, &[(5, 15)], &[(1, 18), (15, 3)]),
    (216, 1, &[(5, 35)], &[(1, 22), (3, 14), (15, 5)]),
    (234, 1, &[(5, 20)], &[(1, 19), (3, 5), (15, 2)]),
    (234, 1, &[(5, 19)], &[(1, 14), (3, 10), (15, 1)]),
    (81, 1, &[(5, 3), (15, 3)], &[(1, 6), (3, 6)]),
    (2976, 2, &[(5, 25)], &[(1, 20), (3, 10), (15, 1)]),
    (2049, 2, &[(5, 24)], &[(1, 15), (3, 15)]),
    (27, 2, &[(5, 10), (15, 2)], &[(1, 17), (3, 1)]),
    (3528, 2, &[(5, 9), (15, 3)], &[(1, 12), (3, 6)]),
    (13224, 3, &[(5, 30)], &[(1, 21), (3, 15)]),
    (38858, 3, &[(5, 15), (15, 3)], &[(1, 18), (3, 6)]),
    (6075, 3, &[(5, 14), (15, 4)], &[(1, 13), (3, 11)]),
    (134, 3, &[(5, 13), (15, 5)], &[(1, 8), (3, 16)]),
    (109101, 4, &[(5, 20), (15, 4)], &[(1, 19), (3, 11)]),
    (22226, 4, &[(5, 19), (15, 5)], &[(1, 14), (3, 16)]),
    (3528, 4, &[(5, 3), (15, 9)], &[(1, 6), (3, 12)]),
    (-3, 4, &[(5, 2), (15, 10)], &[(1, 1), (3, 17)]),
    (270086, 5, &[(5, 25), (15, 5)], &[(1, 20), (3, 16)]),
    (18018, 5, &[(5, 10), (15, 8)], &[(1, 17), (3, 7)]),
    (138555, 5, &[(5, 9), (15, 9)], &[(1, 12), (3, 12)]),
    (-2002, 5, &[(5, 8), (15, 10)], &[(1, 7), (3, 17)]),
    (1270766, 6, &[(5, 15), (15, 9)], &[(1, 18), (3, 12)]),
    (-55171, 6, &[(5, 14), (15, 10)], &[(1, 13), (3, 17)]),
    (25, 6, &[(15, 15)], &[(3, 18), (5, 3)]),
    (441524, 7, &[(5, 20), (15, 10)], &[(1, 19), (3, 17)]),
    (10854, 7, &[(5, 5), (15, 13)], &[(1, 16), (3, 8)]),
    (-54675, 7, &[(5, 4), (15, 14)], &[(1, 11), (3, 13)]),
    (38858, 7, &[(5, 3), (15, 15)], &[(1, 6), (3, 18)]),
    (1270766, 8, &[(5, 9), (15, 15)], &[(1, 12), (3, 18)]),
    (496539, 8, &[(5, 10), (15, 14)], &[(1, 17), (3, 13)]),
    (12104417, 9, &[(5, 15), (15, 15)], &[(1, 18), (3, 18)]),
    (-2106, 9, &[(15, 20)], &[(1, 5), (3, 19), (5, 2)]),
    (18954, 9, &[(15, 19)], &[(1, 10), (3, 14), (5, 1)]),
    (1800306, 10, &[(5, 5), (15, 19)], &[(1, 16), (3, 14)]),
    (-981909, 10, &[(5, 4), (15, 20)], &[(1, 11), (3, 19)]),
    (-3973716, 11, &[(5, 10), (15, 20)], &[(1, 17), (3, 19)]),
    (241056, 12, &[(15, 25)], &[(1, 10), (3, 20), (5, 1)]),
    (-1493721, 12, &[(15, 24)], &[(1, 15), (3, 15)]),
    (21876966, 13, &[(5, 5), (15, 25)], &[(1, 16), (3, 20)]),
    (-9640296, 15, &[(15, 30)], &[(1, 15), (3, 21)]),
    (1417176, 17, &[(15, 35)], &[(1, 14), (3, 22), (5, 5)]),
];

pub(crate) const RHS_THM19_PRINTED24: &[EtaTerm] = &[
    (1, 0, &[(4, 4), (10, 40)], &[(1, 2), (2, 8), (5, 15), (20, 16)]),
    (-3, 1, &[(4, 2), (10, 15)], &[(1, 5), (2, 3), (20, 6)]),
    (4, 1, &[(4, 3), (10, 30)], &[(1, 3), (2, 6), (5, 10), (20, 11)]),
    (-12, 2, &[(4, 2), (10, 20)], &[(1, 4), (2, 4), (5, 5), (20, 6)]),
    (-20, 2, &[(4, 1), (5, 5), (10, 5)], &[(1, 6), (2, 1), (20, 1)]),
    (24, 2, &[(4, 3), (10, 35)], &[(1, 2), (2, 7), (5, 15), (20, 11)]),
    (-27, 3, &[(2, 1), (5, 10), (20, 4)], &[(1, 7)]),
    (-60, 3, &[(4, 1), (10, 10)], &[(1, 5), (2, 2), (20, 1)]),
    (196, 3, &[(4, 2), (10, 25)], &[(1, 3), (2, 5), (5, 10), (20, 6)]),
    (-83, 4, &[(5, 5), (20, 4)], &[(1, 6)]),
    (456, 4, &[(4, 1), (10, 15)], &[(1, 4), (2, 3), (5, 5), (20, 1)]),
    (296, 5, &[(10, 5), (20, 4)], &[(1, 5), (2, 1)]),
    (96, 5, &[(4, 1), (10, 20)], &[(1, 3), (2, 4), (5, 10), (20, 1)]),
    (128, 6, &[(2, 1), (5, 5), (20, 9)], &[(1, 6), (4, 1), (10, 5)]),
    (592, 6, &[(10, 10), (20, 4)], &[(1, 4), (2, 2), (5, 5)]),
    (512, 7, &[(20, 9)], &[(1, 5), (4, 1)]),
];

pub(crate) const RHS_THM19_PRINTED72: &[EtaTerm] = &[
    (1, 0, &[(4, 4), (10, 40)], &[(1, 2), (2, 8), (5, 15), (20, 16)]),
    (-3, 1, &[(4, 2), (10, 15)], &[(1, 5), (2, 3), (20, 6)]),
    (4, 1, &[(4, 3), (10, 30)], &[(1, 3), (2, 6), (5, 10), (20, 11)]),
    (-12, 2, &[(4, 2), (10, 20)], &[(1, 4), (2, 4), (5, 5), (20, 6)]),
    (-20, 2, &[(4, 1), (5, 5), (10, 5)], &[(1, 6), (2, 1), (20, 1)]),
    (72, 2, &[(4, 3), (10, 35)], &[(1, 2), (2, 7), (5, 15), (20, 11)]),
    (-27, 3, &[(2, 1), (5, 10), (20, 4)], &[(1, 7)]),
    (-60, 3, &[(4, 1), (10, 10)], &[(1, 5), (2, 2), (20, 1)]),
    (196, 3, &[(4, 2), (10, 25)], &[(1, 3), (2, 5), (5, 10), (20, 6)]),
    (-83, 4, &[(5, 5), (20, 4)], &[(1, 6)]),
    (456, 4, &[(4, 1), (10, 15)], &[(1, 4), (2, 3), (5, 5), (20, 1)]),
    (296, 5, &[(10, 5), (20, 4)], &[(1, 5), (2, 1)]),
    (96, 5, &[(4, 1), (10, 20)], &[(1, 3), (2, 4), (5, 10), (20, 1)]),
    (128, 6, &[(2, 1), (5, 5), (20, 9)], &[(1, 6), (4, 1), (10, 5)]),
    (592, 6, &[(10, 10), (20, 4)], &[(1, 4), (2, 2), (5, 5)]),
    (512, 7, &[(20, 9)], &[(1, 5), (4, 1)]),
];

pub(crate) const RHS_THM19_CORRECTED: &[EtaTerm] = &[
    (1, 0, &[(4, 4), (10, 40)], &[(1, 2), (2, 8), (5, 15), (20, 16)]),
    (-3, 1, &[(4, 2), (10, 15)], &[(1, 5), (2, 3), (20, 6)]),
    (4, 1, &[(4, 3), (10, 30)], &[(1, 3), (2, 6), (5, 10), (20, 11)]),
    (-12, 2, &[(4, 2), (10, 20)], &[(1, 4), (2, 4), (5, 5), (20, 6)]),
    (-20, 2, &[(4, 1), (5, 5), (10, 5)], &[(1, 6), (2, 1), (20, 1)]),
    (24, 2, &[(4, 3), (10, 35)], &[(1, 2), (2, 7), (5, 15), (20, 11)]),
    (-27, 3, &[(2, 1), (5, 10), (20, 4)], &[(1, 7), (10, 5)]),
    (-60, 3, &[(4, 1), (10, 10)], &[(1, 5), (2, 2), (20, 1)]),
    (196, 3, &[(4, 2), (10, 25)], &[(1, 3), (2, 5), (5, 10), (20, 6)]),
    (-83, 4, &[(5, 5), (20, 4)], &[(1, 6)]),
    (456, 4, &[(4, 1), (10, 15)], &[(1, 4), (2, 3), (5, 5), (20, 1)]),
    (296, 5, &[(10, 5), (20, 4)], &[(1, 5), (2, 1)]),
    (96, 5, &[(4, 1), (10, 20)], &[(1, 3), (2, 4), (5, 10), (20, 1)]),
    (128, 6, &[(2, 1), (5, 5), (20, 9)], &[(1, 6), (4, 1), (10, 5)]),
    (592, 6, &[(10, 10), (20, 4)], &[(1, 4), (2, 2), (5, 5)]),
    (512, 7, &[(20, 9)], &[(1, 5), (4, 1)]),
];

pub(crate) const RHS_B4GEN: &[EtaTerm] = &[
    (3, 0, &[(4, 1), (10, 10)], &[(1, 5), (2, 2), (20, 4)]),
    (1, 1, &[(5, 5), (20, 1)], &[(1, 6)]),
    (-8, 2, &[(10, 5), (20, 1)], &[(1, 5), (2, 1)]),
    (-4, 3, &[(2, 1), (5, 5), (20, 6)], &[(1, 6), (4, 1), (10, 5)]),
    (-16, 4, &[(20, 6)], &[(1, 5), (4, 1)]),
];

pub(crate) const RHS_ELL1: &[EtaTerm] = &[
    (3, 0, &[(2, 2), (10, 6)], &[(1, 5), (4, 1), (20, 2)]),
    (1, 1, &[(2, 4), (5, 5), (20, 3)], &[(1, 6), (4, 2), (10, 4)]),
    (4, 2, &[(2, 3), (10, 1), (20, 3)], &[(1, 5), (4, 2)]),
];

pub(crate) const RHS_STEP100: &[EtaTerm] = &[
    (1, 0, &[(5, 5)], &[(1, 6), (15, 1)]),
    (10, 1, &[(5, 9)], &[(1, 2), (15, 1)]),
    (1, 2, &[(15, 5)], &[(3, 6), (5, 1)]),
    (45, 3, &[(5, 4), (15, 4)], &[(1, 1), (3, 1)]),
    (-90, 5, &[(15, 9)], &[(3, 2), (5, 1)]),
];
