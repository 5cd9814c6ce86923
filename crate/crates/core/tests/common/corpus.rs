// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Query texts shared by the parser tests and the acceptance suite.

pub const CORPUS: &[&str] = &[
    "SELECT * FROM t",
    "select * from t",
    "SELECT a FROM t",
    "SELECT a, b, c FROM t",
    "SELECT price, user_rating FROM hotels SKYLINE OF price MIN, user_rating MAX",
    "SELECT price, user_rating FROM hotels SKYLINE OF price MIN, user_rating MAX;",
    "SELECT * FROM t SKYLINE OF x MIN",
    "SELECT * FROM t SKYLINE OF x MAX",
    "SELECT * FROM t SKYLINE OF x DIFF, y MIN",
    "SELECT * FROM t SKYLINE OF DISTINCT x MIN",
    "SELECT * FROM t SKYLINE OF COMPLETE x MIN",
    "SELECT * FROM t SKYLINE OF DISTINCT COMPLETE x MIN",
    "SELECT * FROM t SKYLINE OF distinct complete x min, y max, z diff",
    "SELECT * FROM t SKYLINE OF a MIN, b MIN, c MIN, d MIN, e MIN, f MIN",
    "SELECT * FROM t WHERE a = 1",
    "SELECT * FROM t WHERE a <> 1",
    "SELECT * FROM t WHERE a != 1",
    "SELECT * FROM t WHERE a < 1",
    "SELECT * FROM t WHERE a <= -1",
    "SELECT * FROM t WHERE a > 1.5",
    "SELECT * FROM t WHERE a >= 1.5e3",
    "SELECT * FROM t WHERE a >= .25",
    "SELECT * FROM t WHERE a = 'x'",
    "SELECT * FROM t WHERE a = 'it''s'",
    "SELECT * FROM t WHERE a = ''",
    "SELECT * FROM t WHERE a = TRUE",
    "SELECT * FROM t WHERE a = false",
    "SELECT * FROM t WHERE 3 < a",
    "SELECT * FROM t WHERE a IS NULL",
    "SELECT * FROM t WHERE a IS NOT NULL",
    "SELECT * FROM t WHERE NOT a = 1",
    "SELECT * FROM t WHERE NOT (a = 1 OR b = 2)",
    "SELECT * FROM t WHERE a = 1 AND b = 2",
    "SELECT * FROM t WHERE a = 1 OR b = 2",
    "SELECT * FROM t WHERE a = 1 AND b = 2 OR c = 3",
    "SELECT * FROM t WHERE a = 1 AND (b = 2 OR c = 3)",
    "SELECT * FROM t WHERE (a = 1)",
    "SELECT * FROM t WHERE ((a = 1) AND ((b < 2)))",
    "SELECT * FROM t WHERE NOT NOT a IS NULL",
    "SELECT * FROM t WHERE a = 1 AND b = 2 AND c = 3 AND d = 4",
    "SELECT * FROM t WHERE a = -9223372036854775808",
    "SELECT * FROM t WHERE a = 1e300",
    "SELECT * FROM t ORDER BY a",
    "SELECT * FROM t ORDER BY a ASC",
    "SELECT * FROM t ORDER BY a DESC",
    "SELECT * FROM t SKYLINE OF x MIN ORDER BY x",
    "SELECT * FROM t WHERE y > 0 SKYLINE OF x MIN ORDER BY x DESC",
    "SELECT a, b FROM t WHERE a IS NOT NULL AND b < 10 SKYLINE OF DISTINCT a MAX, b MIN ORDER BY b",
    "SELECT a FROM t WHERE a > 0 OR NOT b IS NOT NULL ORDER BY a DESC",
    "SELECT _x1 FROM t_2 SKYLINE OF _x1 MIN",
    "SELECT * FROM t -- trailing comment",
    "-- leading comment\nSELECT *\nFROM t\nSKYLINE OF\n  x MIN,\n  y MAX",
    "SELECT\tprice\tFROM\thotels\tSKYLINE\tOF\tprice\tMIN",
    "SELECT * FROM t WHERE price <= 100 AND rating >= 4.5 SKYLINE OF COMPLETE price MIN, rating MAX, city DIFF",
    "SELECT min_price FROM t SKYLINE OF min_price MIN",
];

/// (query, expected error offset)
pub const NEGATIVE: &[(&str, usize)] = &[
    ("SELECT * FROM t SKYLINE OF x", 28),
    ("SELECT * FROM t SKYLINE OF", 26),
    ("SELECT * FROM t SKYLINE x MIN", 24),
    ("SELECT * FROM t ORDER BY x SKYLINE OF x MIN", 27),
    ("SELECT * FROM t SKYLINE OF DISTINCT DISTINCT x MIN", 36),
    ("SELECT * FROM t SKYLINE OF COMPLETE COMPLETE x MIN", 36),
    ("SELECT * FROM t SKYLINE OF COMPLETE DISTINCT x MIN", 36),
    ("SELECT * FROM t SKYLINE OF x MIN,", 33),
    ("SELECT * FROM t SKYLINE OF x UP", 29),
    ("SELECT * FROM t GROUP BY x", 16),
    ("SELECT * FROM t extra", 16),
    ("SELECT FROM t", 7),
    ("SELECT * FROM", 13),
    ("SELECT * FROM t WHERE", 21),
    ("SELECT * FROM t WHERE a = NULL", 26),
    ("SELECT * FROM t WHERE a = 'open", 26),
    ("SELECT * FROM t WHERE a = 1 @", 28),
    ("SELECT * FROM t WHERE a = 99999999999999999999", 26),
    ("SELECT * FROM a, b", 15),
    ("SELECT * FROM t LIMIT 5", 16),
];
