//! Frozen edge list of the truncated icosahedron (C60 buckyball graph).

/// 90 undirected edges on vertices `0..60`, each listed once with the smaller endpoint first.
pub(crate) const BUCKYBALL_EDGES: [(usize, usize); 90] = [
    (0, 1),
    (0, 4),
    (0, 5),
    (1, 2),
    (1, 10),
    (2, 3),
    (2, 15),
    (3, 4),
    (3, 20),
    (4, 25),
    (5, 6),
    (5, 7),
    (6, 9),
    (6, 11),
    (7, 8),
    (7, 26),
    (8, 9),
    (8, 30),
    (9, 35),
    (10, 11),
    (10, 12),
    (11, 13),
    (12, 14),
    (12, 16),
    (13, 14),
    (13, 36),
    (14, 40),
    (15, 16),
    (15, 17),
    (16, 18),
    (17, 19),
    (17, 21),
    (18, 19),
    (18, 41),
    (19, 45),
    (20, 21),
    (20, 22),
    (21, 23),
    (22, 24),
    (22, 27),
    (23, 24),
    (23, 46),
    (24, 50),
    (25, 26),
    (25, 27),
    (26, 28),
    (27, 29),
    (28, 29),
    (28, 31),
    (29, 51),
    (30, 31),
    (30, 32),
    (31, 33),
    (32, 34),
    (32, 37),
    (33, 34),
    (33, 52),
    (34, 55),
    (35, 36),
    (35, 37),
    (36, 38),
    (37, 39),
    (38, 39),
    (38, 42),
    (39, 56),
    (40, 41),
    (40, 42),
    (41, 43),
    (42, 44),
    (43, 44),
    (43, 47),
    (44, 57),
    (45, 46),
    (45, 47),
    (46, 48),
    (47, 49),
    (48, 49),
    (48, 53),
    (49, 58),
    (50, 51),
    (50, 53),
    (51, 52),
    (52, 54),
    (53, 54),
    (54, 59),
    (55, 56),
    (55, 59),
    (56, 57),
    (57, 58),
    (58, 59),
];
