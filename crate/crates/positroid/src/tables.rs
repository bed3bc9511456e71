//! Reference values for `A_{k,n}(q)` and `Ê_{k,n}(q)`, as published.

/// `(k, n, A_{k,n}(q))`, descending powers.
pub const A_TABLE: [(usize, usize, &str); 9] = [
    (1, 1, "1"),
    (1, 2, "q+2"),
    (1, 3, "q^2+3q+3"),
    (1, 4, "q^3+4q^2+6q+4"),
    (2, 4, "q^4+4q^3+10q^2+12q+6"),
    (2, 5, "q^6+5q^5+15q^4+30q^3+40q^2+30q+10"),
    (2, 6, "q^8+6q^7+21q^6+50q^5+90q^4+120q^3+110q^2+60q+15"),
    (
        3,
        6,
        "q^9+6q^8+21q^7+56q^6+114q^5+180q^4+215q^3+180q^2+90q+20",
    ),
    (
        3,
        7,
        "q^12+7q^11+28q^10+84q^9+203q^8+406q^7+679q^6+938q^5+1050q^4+910q^3+560q^2+210q+35",
    ),
];

/// `(k, n, Ê_{k,n}(q))`, ascending powers, for `4 ≤ n ≤ 7`.
pub const EHAT_TABLE: [(usize, usize, &str); 22] = [
    (1, 4, "1"),
    (2, 4, "6+4q+q^2"),
    (3, 4, "6+4q+q^2"),
    (4, 4, "1"),
    (1, 5, "1"),
    (2, 5, "10+10q+5q^2+q^3"),
    (3, 5, "20+25q+15q^2+5q^3+q^4"),
    (4, 5, "10+10q+5q^2+q^3"),
    (5, 5, "1"),
    (1, 6, "1"),
    (2, 6, "15+20q+15q^2+6q^3+q^4"),
    (3, 6, "50+90q+84q^2+50q^3+21q^4+6q^5+q^6"),
    (4, 6, "50+90q+84q^2+50q^3+21q^4+6q^5+q^6"),
    (5, 6, "15+20q+15q^2+6q^3+q^4"),
    (6, 6, "1"),
    (1, 7, "1"),
    (2, 7, "21+35q+35q^2+21q^3+7q^4+q^5"),
    (3, 7, "105+245q+308q^2+259q^3+161q^4+77q^5+28q^6+7q^7+q^8"),
    (
        4,
        7,
        "175+441q+588q^2+532q^3+364q^4+196q^5+84q^6+28q^7+7q^8+q^9",
    ),
    (5, 7, "105+245q+308q^2+259q^3+161q^4+77q^5+28q^6+7q^7+q^8"),
    (6, 7, "21+35q+35q^2+21q^3+7q^4+q^5"),
    (7, 7, "1"),
];
