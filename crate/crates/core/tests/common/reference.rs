//! Reference values with the digits exactly as published. Match cells are
//! ordered C1-S1, C1-S2, C2-S1, C2-S2, each over DP1..DP3.

/// Per-DP totals `[demand, supply]` for DP1..DP3, uniform N and O.
pub const SCENARIO1_DP_TOTALS: &[(&str, [&str; 6])] = &[
    ("N", ["70", "121", "40", "250", "490", "79"]),
    ("O", ["80", "242", "180", "329", "520", "329"]),
];

/// Matched quantities under uniform N and O.
pub const SCENARIO1_MATCHES_UNIFORM: &[(&str, [&str; 12])] = &[
    ("N", ["30", "0", "59.653", "0", "0", "0", "40", "0", "19.347", "0", "40", "0"]),
    ("O", ["30", "0", "153.846", "0", "140", "99.231", "50", "0", "46.154", "0", "40", "29.769"]),
];

/// Contracted quantities under uniform N and O.
pub const SCENARIO1_REALIZED_UNIFORM: &[(&str, [&str; 12])] = &[
    ("N", ["30", "0", "59.653", "0", "0", "0", "40", "0", "19.347", "0", "40", "0"]),
    ("O", ["30", "0", "92.308", "0", "116.923", "53.846", "50", "0", "27.692", "0", "40", "16.154"]),
];

/// `U_C1, U_C2, U_S1, U_S2, TMQ, TCQ, TU` under uniform N and O.
pub const SCENARIO1_UTILITY_UNIFORM: &[(&str, [&str; 7])] = &[
    ("N", ["777.103", "599.547", "532.45", "210", "189", "189", "2119.1"]),
    ("O", ["1496", "781.654", "714", "1114.346", "589", "426.923", "4106"]),
];

/// Per-DP totals `[demand, supply]` for DP1..DP3, uniform N and O.
pub const SCENARIO2_DP_TOTALS: &[(&str, [&str; 6])] = &[
    ("N", ["150", "140", "199", "165", "121", "115"]),
    ("O", ["384", "315", "257", "165", "271", "360"]),
];

/// Matched quantities under uniform N and O.
pub const SCENARIO2_MATCHES_UNIFORM: &[(&str, [&str; 12])] = &[
    ("N", ["0", "125", "115", "0", "40", "0", "0", "0", "0", "140", "0", "0"]),
    ("O", ["104.203", "125", "82.155", "87.75", "40", "38.845", "66.797", "0", "101.845", "56.25", "0", "48.155"]),
];

/// Contracted quantities under uniform N and O.
pub const SCENARIO2_REALIZED_UNIFORM: &[(&str, [&str; 12])] = &[
    ("N", ["0", "125", "115", "0", "40", "0", "0", "0", "0", "140", "0", "0"]),
    ("O", ["0", "125", "51.347", "0", "8.642", "0", "0", "0", "63.653", "0", "0", "0"]),
];

/// `U_C1, U_C2, U_S1, U_S2, TMQ, TCQ, TU` under uniform N and O.
pub const SCENARIO2_UTILITY_UNIFORM: &[(&str, [&str; 7])] = &[
    ("N", ["2028.25", "350", "1075.25", "830", "420", "420", "4283.5"]),
    ("O", ["1407.938", "404.197", "1075.25", "46.234", "751", "248.642", "2933.619"]),
];

/// `U_C1, U_C2, U_S1, U_S2, TMQ, TCQ, TU` for every profile.
pub const SCENARIO1_SWEEP: &[(&str, [&str; 7])] = &[
    ("NNNN", ["777.103", "599.547", "532.45", "210", "189", "189", "2119.1"]),
    ("ONNN", ["1143.423", "590.227", "532.45", "945", "329", "329", "3211.1"]),
    ("NONN", ["777.103", "667.547", "568.45", "210", "199", "199", "2223.1"]),
    ("NNON", ["1098.663", "703.837", "713.5", "210", "310", "240", "2726"]),
    ("NNNO", ["1044.976", "686.424", "532.45", "745.35", "318", "318", "3009.2"]),
    ("OONN", ["1143.423", "658.227", "568.45", "945", "339", "339", "3315.1"]),
    ("ONON", ["1471", "688.5", "713.5", "945", "450", "380", "3818"]),
    ("ONNO", ["1291.5", "634.65", "532.45", "1235.5", "458", "399", "3694.1"]),
    ("NOON", ["1035.612", "751.388", "714", "210", "320", "240", "2711"]),
    ("NONO", ["1044.976", "754.424", "568.45", "745.35", "328", "328", "3113.2"]),
    ("NNOO", ["1366.536", "790.714", "713.5", "745.35", "439", "369", "3616.1"]),
    ("OOON", ["1406.769", "737.231", "714", "945", "460", "380", "3803"]),
    ("OONO", ["1291.5", "702.65", "568.45", "1235.5", "468", "409", "3798.1"]),
    ("ONOO", ["1560.231", "732.923", "713.5", "1114.346", "579", "426.923", "4121"]),
    ("NOOO", ["1303.485", "838.265", "714", "745.35", "449", "369", "3601.1"]),
    ("OOOO", ["1496", "781.654", "714", "1114.346", "589", "426.923", "4106"]),
];

/// `U_C1, U_C2, U_S1, U_S2, TMQ, TCQ, TU` for every profile.
pub const SCENARIO2_SWEEP: &[(&str, [&str; 7])] = &[
    ("NNNN", ["2028.25", "350", "1075.25", "830", "420", "420", "4283.5"]),
    ("ONNN", ["2148.25", "136.719", "1075.25", "630.625", "420", "374.688", "3990.844"]),
    ("NONN", ["1534.938", "620.065", "1075.25", "593.926", "420", "366.347", "3824.179"]),
    ("NNON", ["2028.25", "0", "1075.25", "214", "436", "280", "3317.5"]),
    ("NNNO", ["1137", "350", "575", "830", "430", "305", "2892"]),
    ("OONN", ["1790.876", "540.916", "1075.25", "830", "420", "420", "4237.042"]),
    ("ONON", ["1866.25", "136.719", "1075.25", "240.625", "597", "294.688", "3318.844"]),
    ("ONNO", ["1239", "136.719", "575", "604.225", "430", "253.688", "2554.944"]),
    ("NOON", ["1534.938", "404.197", "1075.25", "214", "499", "280", "3228.386"]),
    ("NONO", ["1465.732", "577.445", "988.25", "642.635", "580", "357.417", "3674.061"]),
    ("NNOO", ["2028.25", "0", "1075.25", "214", "436", "280", "3317.5"]),
    ("OOON", ["1407.938", "404.197", "1075.25", "46.234", "660", "248.642", "2933.619"]),
    ("OONO", ["1567.732", "470.621", "988.25", "604.225", "580", "348.688", "3630.828"]),
    ("ONOO", ["1866.25", "136.719", "1075.25", "240.625", "601", "294.688", "3318.844"]),
    ("NOOO", ["1655.358", "404.197", "1075.25", "377.149", "586", "318.845", "3511.954"]),
    ("OOOO", ["1407.938", "404.197", "1075.25", "46.234", "751", "248.642", "2933.619"]),
];

/// Bid quantities `C1, C2, S1, S2` then supplier prices `S1, S2`, three DPs each. A zero price means no bid.
pub const SCENARIO1_BIDS: &[(&str, [&str; 18])] = &[
    ("NNNN", ["30", "0", "370", "40", "40", "120", "121", "0", "79", "0", "250", "0", "14.6", "0", "14.65", "0", "19.15", "0"]),
    ("ONNN", ["30", "140", "400", "40", "40", "120", "121", "0", "79", "0", "250", "0", "14.6", "0", "14.65", "0", "19.15", "0"]),
    ("NONN", ["30", "0", "370", "50", "40", "120", "121", "0", "79", "0", "250", "0", "14.6", "0", "14.65", "0", "19.15", "0"]),
    ("NNON", ["30", "0", "370", "40", "40", "120", "121", "79", "200", "0", "250", "0", "14.6", "14.9", "14.65", "0", "19.15", "0"]),
    ("NNNO", ["30", "0", "370", "40", "40", "120", "121", "0", "79", "121", "250", "129", "14.6", "0", "14.65", "20.1", "19.15", "20.25"]),
    ("OONN", ["30", "140", "400", "50", "40", "120", "121", "0", "79", "0", "250", "0", "14.6", "0", "14.65", "0", "19.15", "0"]),
    ("ONON", ["30", "140", "400", "40", "40", "120", "121", "79", "200", "0", "250", "0", "14.6", "14.9", "14.65", "0", "19.15", "0"]),
    ("ONNO", ["30", "140", "400", "40", "40", "120", "121", "0", "79", "121", "250", "129", "14.6", "0", "14.65", "20.1", "19.15", "20.25"]),
    ("NOON", ["30", "0", "370", "50", "40", "120", "121", "79", "200", "0", "250", "0", "14.6", "14.9", "14.65", "0", "19.15", "0"]),
    ("NONO", ["30", "0", "370", "50", "40", "120", "121", "0", "79", "121", "250", "129", "14.6", "0", "14.65", "20.1", "19.15", "20.25"]),
    ("NNOO", ["30", "0", "370", "40", "40", "120", "121", "79", "200", "121", "250", "129", "14.6", "14.9", "14.65", "20.1", "19.15", "20.25"]),
    ("OOON", ["30", "140", "400", "50", "40", "120", "121", "79", "200", "0", "250", "0", "14.6", "14.9", "14.65", "0", "19.15", "0"]),
    ("OONO", ["30", "140", "400", "50", "40", "120", "121", "0", "79", "121", "250", "129", "14.6", "0", "14.65", "20.1", "19.15", "20.25"]),
    ("ONOO", ["30", "140", "400", "40", "40", "120", "121", "79", "200", "121", "250", "129", "14.6", "14.9", "14.65", "20.1", "19.15", "20.25"]),
    ("NOOO", ["30", "0", "370", "50", "40", "120", "121", "79", "200", "121", "250", "129", "14.6", "14.9", "14.65", "20.1", "19.15", "20.25"]),
    ("OOOO", ["30", "140", "400", "50", "40", "120", "121", "79", "200", "121", "250", "129", "14.6", "14.9", "14.65", "20.1", "19.15", "20.25"]),
];

/// Matched quantities for every profile.
pub const SCENARIO1_MATCHES: &[(&str, [&str; 12])] = &[
    ("NNNN", ["30", "0", "59.653", "0", "0", "0", "40", "0", "19.347", "0", "40", "0"]),
    ("ONNN", ["30", "0", "60.769", "0", "140", "0", "40", "0", "18.231", "0", "40", "0"]),
    ("NONN", ["30", "0", "59.653", "0", "0", "0", "50", "0", "19.347", "0", "40", "0"]),
    ("NNON", ["30", "0", "151.02", "0", "0", "0", "40", "0", "48.98", "0", "40", "0"]),
    ("NNNO", ["30", "0", "59.653", "0", "0", "97.408", "40", "0", "19.347", "0", "40", "31.592"]),
    ("OONN", ["30", "0", "60.769", "0", "140", "0", "50", "0", "18.231", "0", "40", "0"]),
    ("ONON", ["30", "0", "153.846", "0", "140", "0", "40", "0", "46.154", "0", "40", "0"]),
    ("ONNO", ["30", "0", "60.769", "0", "140", "99.231", "40", "0", "18.231", "0", "40", "29.769"]),
    ("NOON", ["30", "0", "151.02", "0", "0", "0", "50", "0", "48.98", "0", "40", "0"]),
    ("NONO", ["30", "0", "59.653", "0", "0", "97.408", "50", "0", "19.347", "0", "40", "31.592"]),
    ("NNOO", ["30", "0", "151.02", "0", "0", "97.408", "40", "0", "48.98", "0", "40", "31.592"]),
    ("OOON", ["30", "0", "153.846", "0", "140", "0", "50", "0", "46.154", "0", "40", "0"]),
    ("OONO", ["30", "0", "60.769", "0", "140", "99.231", "50", "0", "18.231", "0", "40", "29.769"]),
    ("ONOO", ["30", "0", "153.846", "0", "140", "99.231", "40", "0", "46.154", "0", "40", "29.769"]),
    ("NOOO", ["30", "0", "151.02", "0", "0", "97.408", "50", "0", "48.98", "0", "40", "31.592"]),
    ("OOOO", ["30", "0", "153.846", "0", "140", "99.231", "50", "0", "46.154", "0", "40", "29.769"]),
];

/// Contracted quantities for every profile.
pub const SCENARIO1_REALIZED: &[(&str, [&str; 12])] = &[
    ("NNNN", ["30", "0", "59.653", "0", "0", "0", "40", "0", "19.347", "0", "40", "0"]),
    ("ONNN", ["30", "0", "60.769", "0", "140", "0", "40", "0", "18.231", "0", "40", "0"]),
    ("NONN", ["30", "0", "59.653", "0", "0", "0", "50", "0", "19.347", "0", "40", "0"]),
    ("NNON", ["30", "0", "98.163", "0", "0", "0", "40", "0", "31.837", "0", "40", "0"]),
    ("NNNO", ["30", "0", "59.653", "0", "0", "97.408", "40", "0", "19.347", "0", "40", "31.592"]),
    ("OONN", ["30", "0", "60.769", "0", "140", "0", "50", "0", "18.231", "0", "40", "0"]),
    ("ONON", ["30", "0", "100", "0", "140", "0", "40", "0", "30", "0", "40", "0"]),
    ("ONNO", ["30", "0", "60.769", "0", "140", "53.846", "40", "0", "18.231", "0", "40", "16.154"]),
    ("NOON", ["30", "0", "90.612", "0", "0", "0", "50", "0", "29.388", "0", "40", "0"]),
    ("NONO", ["30", "0", "59.653", "0", "0", "97.408", "50", "0", "19.347", "0", "40", "31.592"]),
    ("NNOO", ["30", "0", "98.163", "0", "0", "97.408", "40", "0", "31.837", "0", "40", "31.592"]),
    ("OOON", ["30", "0", "92.308", "0", "140", "0", "50", "0", "27.692", "0", "40", "0"]),
    ("OONO", ["30", "0", "60.769", "0", "140", "53.846", "50", "0", "18.231", "0", "40", "16.154"]),
    ("ONOO", ["30", "0", "100", "0", "116.923", "53.846", "40", "0", "30", "0", "40", "16.154"]),
    ("NOOO", ["30", "0", "90.612", "0", "0", "97.408", "50", "0", "29.388", "0", "40", "31.592"]),
    ("OOOO", ["30", "0", "92.308", "0", "116.923", "53.846", "50", "0", "27.692", "0", "40", "16.154"]),
];

/// Bid quantities `C1, C2, S1, S2` then supplier prices `S1, S2`, three DPs each. A zero price means no bid.
pub const SCENARIO2_BIDS: &[(&str, [&str; 18])] = &[
    ("NNNN", ["0", "199", "121", "150", "0", "0", "0", "125", "115", "140", "40", "0", "0", "15.7", "15.95", "20.4", "19.45", "0"]),
    ("ONNN", ["234", "257", "121", "150", "0", "0", "0", "125", "115", "140", "40", "0", "0", "15.7", "15.95", "20.4", "19.45", "0"]),
    ("NONN", ["0", "199", "121", "150", "0", "150", "0", "125", "115", "140", "40", "0", "0", "15.7", "15.95", "20.4", "19.45", "0"]),
    ("NNON", ["0", "199", "121", "150", "0", "0", "171", "125", "184", "140", "40", "0", "16.65", "15.7", "15.95", "20.4", "19.45", "0"]),
    ("NNNO", ["0", "199", "121", "150", "0", "0", "0", "125", "115", "144", "40", "176", "0", "15.7", "15.95", "20.4", "19.45", "20.6"]),
    ("OONN", ["234", "257", "121", "150", "0", "150", "0", "125", "115", "140", "40", "0", "0", "15.7", "15.95", "20.4", "19.45", "0"]),
    ("ONON", ["234", "257", "121", "150", "0", "0", "171", "125", "184", "140", "40", "0", "16.65", "15.7", "15.95", "20.4", "19.45", "0"]),
    ("ONNO", ["234", "257", "121", "150", "0", "0", "0", "125", "115", "144", "40", "176", "0", "15.7", "15.95", "20.4", "19.45", "20.6"]),
    ("NOON", ["0", "199", "121", "150", "0", "150", "171", "125", "184", "140", "40", "0", "16.65", "15.7", "15.95", "20.4", "19.45", "0"]),
    ("NONO", ["0", "199", "121", "150", "0", "150", "0", "125", "115", "144", "40", "176", "0", "15.7", "15.95", "20.4", "19.45", "20.6"]),
    ("NNOO", ["0", "199", "121", "150", "0", "0", "171", "125", "184", "144", "40", "176", "16.65", "15.7", "15.95", "20.4", "19.45", "20.6"]),
    ("OOON", ["234", "257", "121", "150", "0", "150", "171", "125", "184", "140", "40", "0", "16.65", "15.7", "15.95", "20.4", "19.45", "0"]),
    ("OONO", ["234", "257", "121", "150", "0", "150", "0", "125", "115", "144", "40", "176", "0", "15.7", "15.95", "20.4", "19.45", "20.6"]),
    ("ONOO", ["234", "257", "121", "150", "0", "0", "171", "125", "184", "144", "40", "176", "16.65", "15.7", "15.95", "20.4", "19.45", "20.6"]),
    ("NOOO", ["0", "199", "121", "150", "0", "150", "171", "125", "184", "144", "40", "176", "16.65", "15.7", "15.95", "20.4", "19.45", "20.6"]),
    ("OOOO", ["234", "257", "121", "150", "0", "150", "171", "125", "184", "144", "40", "176", "16.65", "15.7", "15.95", "20.4", "19.45", "20.6"]),
];

/// Matched quantities for every profile.
pub const SCENARIO2_MATCHES: &[(&str, [&str; 12])] = &[
    ("NNNN", ["0", "125", "115", "0", "40", "0", "0", "0", "0", "140", "0", "0"]),
    ("ONNN", ["0", "125", "115", "85.313", "40", "0", "0", "0", "0", "54.688", "0", "0"]),
    ("NONN", ["0", "125", "51.347", "0", "40", "0", "0", "0", "63.653", "140", "0", "0"]),
    ("NNON", ["0", "125", "121", "0", "40", "0", "150", "0", "0", "0", "0", "0"]),
    ("NNNO", ["0", "125", "0", "0", "40", "121", "0", "0", "0", "144", "0", "0"]),
    ("OONN", ["0", "125", "51.347", "85.313", "40", "0", "0", "0", "63.653", "54.688", "0", "0"]),
    ("ONON", ["104.203", "125", "121", "85.313", "40", "0", "66.797", "0", "0", "54.688", "0", "0"]),
    ("ONNO", ["0", "125", "0", "87.75", "40", "121", "0", "0", "0", "56.25", "0", "0"]),
    ("NOON", ["0", "125", "82.155", "0", "40", "0", "150", "0", "101.845", "0", "0", "0"]),
    ("NONO", ["0", "125", "42.417", "0", "40", "78.583", "0", "0", "52.583", "144", "0", "97.417"]),
    ("NNOO", ["0", "125", "121", "0", "40", "0", "150", "0", "0", "0", "0", "0"]),
    ("OOON", ["104.203", "125", "82.155", "85.313", "40", "0", "66.797", "0", "101.845", "54.688", "0", "0"]),
    ("OONO", ["0", "125", "42.417", "87.75", "40", "78.583", "0", "0", "52.583", "56.25", "0", "97.417"]),
    ("ONOO", ["104.203", "125", "121", "87.75", "40", "0", "66.797", "0", "0", "56.25", "0", "0"]),
    ("NOOO", ["0", "125", "82.155", "0", "40", "38.845", "150", "0", "101.845", "0", "0", "48.155"]),
    ("OOOO", ["104.203", "125", "82.155", "87.75", "40", "38.845", "66.797", "0", "101.845", "56.25", "0", "48.155"]),
];

/// Contracted quantities for every profile.
pub const SCENARIO2_REALIZED: &[(&str, [&str; 12])] = &[
    ("NNNN", ["0", "125", "115", "0", "40", "0", "0", "0", "0", "140", "0", "0"]),
    ("ONNN", ["0", "125", "115", "40", "40", "0", "0", "0", "0", "54.688", "0", "0"]),
    ("NONN", ["0", "125", "51.347", "0", "40", "0", "0", "0", "63.653", "86.347", "0", "0"]),
    ("NNON", ["0", "125", "115", "0", "40", "0", "0", "0", "0", "0", "0", "0"]),
    ("NNNO", ["0", "125", "0", "0", "40", "0", "0", "0", "0", "140", "0", "0"]),
    ("OONN", ["0", "125", "51.347", "85.313", "40", "0", "0", "0", "63.653", "54.688", "0", "0"]),
    ("ONON", ["0", "125", "115", "0", "0", "0", "0", "0", "0", "54.688", "0", "0"]),
    ("ONNO", ["0", "125", "0", "34", "40", "0", "0", "0", "0", "54.688", "0", "0"]),
    ("NOON", ["0", "125", "51.347", "0", "40", "0", "0", "0", "63.653", "0", "0", "0"]),
    ("NONO", ["0", "125", "42.417", "0", "40", "0", "0", "0", "52.583", "97.417", "0", "0"]),
    ("NNOO", ["0", "125", "115", "0", "40", "0", "0", "0", "0", "0", "0", "0"]),
    ("OOON", ["0", "125", "51.347", "0", "8.642", "0", "0", "0", "63.653", "0", "0", "0"]),
    ("OONO", ["0", "125", "42.417", "34", "40", "0", "0", "0", "52.583", "54.688", "0", "0"]),
    ("ONOO", ["0", "125", "115", "0", "0", "0", "0", "0", "0", "54.688", "0", "0"]),
    ("NOOO", ["0", "125", "51.347", "0", "40", "38.845", "0", "0", "63.653", "0", "0", "0"]),
    ("OOOO", ["0", "125", "51.347", "0", "8.642", "0", "0", "0", "63.653", "0", "0", "0"]),
];
/// Uniform bid matrices: `(profile, consumer rows, supplier rows, price rows)`.
/// The S2/DP3 price is 20.25 from the pricing rule.
pub type BidMatrices = (&'static str, [[f64; 3]; 2], [[f64; 3]; 2], [[f64; 3]; 2]);

pub const SCENARIO1_BID_MATRICES: [BidMatrices; 2] = [
    (
        "NNNN",
        [[30.0, 0.0, 370.0], [40.0, 40.0, 120.0]],
        [[121.0, 0.0, 79.0], [0.0, 250.0, 0.0]],
        [[14.6, 14.9, 14.65], [20.1, 19.15, 20.25]],
    ),
    (
        "OOOO",
        [[30.0, 140.0, 400.0], [50.0, 40.0, 120.0]],
        [[121.0, 79.0, 200.0], [121.0, 250.0, 129.0]],
        [[14.6, 14.9, 14.65], [20.1, 19.15, 20.25]],
    ),
];

pub const SCENARIO2_BID_MATRICES: [BidMatrices; 2] = [
    (
        "NNNN",
        [[0.0, 199.0, 121.0], [150.0, 0.0, 0.0]],
        [[0.0, 125.0, 115.0], [140.0, 40.0, 0.0]],
        [[16.65, 15.7, 15.95], [20.4, 19.45, 20.6]],
    ),
    (
        "OOOO",
        [[234.0, 257.0, 121.0], [150.0, 0.0, 150.0]],
        [[171.0, 125.0, 184.0], [144.0, 40.0, 176.0]],
        [[16.65, 15.7, 15.95], [20.4, 19.45, 20.6]],
    ),
];

/// Scenario II, uniform O: per player, matches by decreasing per-unit utility.
/// `(player, consumer, supplier, dp, price, transfer cost, utility, q_mo, kept)`,
/// indices zero-based.
pub const SCENARIO2_DROPS: &[(&str, usize, usize, usize, &str, &str, &str, &str, &str)] = &[
    ("C1", 0, 0, 1, "15.7", "1.5", "7.8", "125", "125"),
    ("C1", 0, 0, 2, "15.95", "1.3", "7.75", "82.155", "82.155"),
    ("C1", 0, 0, 0, "16.65", "1.6", "6.75", "104.2031", "104.203"),
    ("C1", 0, 1, 1, "19.45", "1.5", "4.05", "40", "8.6419"),
    ("C1", 0, 1, 2, "20.6", "1.3", "3.1", "38.845", "0"),
    ("C1", 0, 1, 0, "20.4", "1.6", "3", "87.75", "0"),
    ("C2", 1, 0, 2, "15.95", "2.7", "6.35", "101.845", "101.845"),
    ("C2", 1, 0, 0, "16.65", "2.1", "6.25", "66.797", "48.155"),
    ("C2", 1, 1, 0, "20.4", "2.1", "2.5", "56.25", "0"),
    ("C2", 1, 1, 2, "20.6", "2.7", "1.7", "48.155", "0"),
    ("S1", 0, 0, 1, "15.7", "5.4", "4.6", "125", "125"),
    ("S1", 0, 0, 2, "15.95", "5.9", "4.35", "82.155", "51.347"),
    ("S1", 1, 0, 2, "15.95", "5.9", "4.35", "101.845", "63.653"),
    ("S1", 0, 0, 0, "16.65", "7.3", "3.65", "104.203", "0"),
    ("S1", 1, 0, 0, "16.65", "7.3", "3.65", "66.797", "0"),
    ("S2", 0, 1, 1, "19.45", "6.1", "5.35", "40", "40"),
    ("S2", 0, 1, 0, "20.4", "8", "4.4", "87.75", "85.313"),
    ("S2", 1, 1, 0, "20.4", "8", "4.4", "56.25", "54.688"),
    ("S2", 0, 1, 2, "20.6", "8.4", "4.2", "38.845", "0"),
    ("S2", 1, 1, 2, "20.6", "8.4", "4.2", "48.155", "0"),
];
