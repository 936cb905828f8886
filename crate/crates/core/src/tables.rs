//! Reference exact counts and ratios for hollow and solid spheres of revolution.
//!
//! Ratios are kept as decimal strings so that comparisons are made
//! after identical rounding rather than on floats.

/// `(r, primitive, absentee, total)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub r: u32,
    pub primitive: u64,
    pub absentee: u64,
    pub total: u64,
}

impl ReferenceRow {
    pub const fn new(r: u32, primitive: u64, absentee: u64, total: u64) -> Self {
        ReferenceRow { r, primitive, absentee, total }
    }
}

/// Hollow sphere counts: swept voxels, absentees (both hemispheres), completed sphere.
pub const SPHERE_COUNTS: &[ReferenceRow] = &[
    ReferenceRow::new(0, 1, 0, 1),
    ReferenceRow::new(1, 6, 0, 6),
    ReferenceRow::new(2, 46, 8, 54),
    ReferenceRow::new(3, 82, 8, 90),
    ReferenceRow::new(4, 170, 8, 178),
    ReferenceRow::new(5, 254, 24, 278),
    ReferenceRow::new(6, 330, 24, 354),
    ReferenceRow::new(7, 498, 40, 538),
    ReferenceRow::new(8, 614, 40, 654),
    ReferenceRow::new(9, 830, 48, 878),
    ReferenceRow::new(10, 1002, 80, 1082),
    ReferenceRow::new(20, 3978, 256, 4234),
    ReferenceRow::new(30, 8962, 560, 9522),
    ReferenceRow::new(40, 16310, 1016, 17326),
    ReferenceRow::new(50, 25374, 1592, 26966),
    ReferenceRow::new(60, 36438, 2296, 38734),
    ReferenceRow::new(70, 49510, 3080, 52590),
    ReferenceRow::new(80, 64526, 3992, 68518),
    ReferenceRow::new(90, 81582, 5080, 86662),
    ReferenceRow::new(100, 100622, 6248, 106870),
    ReferenceRow::new(200, 404262, 25104, 429366),
    ReferenceRow::new(300, 908250, 56320, 964570),
    ReferenceRow::new(400, 1617026, 100304, 1717330),
    ReferenceRow::new(500, 2524486, 156608, 2681094),
    ReferenceRow::new(600, 3638230, 225456, 3863686),
    ReferenceRow::new(700, 4949282, 307064, 5256346),
    ReferenceRow::new(800, 6461350, 400768, 6862118),
    ReferenceRow::new(900, 8182310, 507392, 8689702),
    ReferenceRow::new(1000, 10097978, 626304, 10724282),
    ReferenceRow::new(1100, 12223938, 757888, 12981826),
    ReferenceRow::new(1200, 14543190, 902056, 15445246),
    ReferenceRow::new(1300, 17063386, 1058408, 18121794),
    ReferenceRow::new(1400, 19796562, 1227664, 21024226),
    ReferenceRow::new(1500, 22720358, 1409144, 24129502),
    ReferenceRow::new(1600, 25858590, 1603424, 27462014),
    ReferenceRow::new(1700, 29186106, 1810216, 30996322),
    ReferenceRow::new(1800, 32729258, 2029288, 34758546),
    ReferenceRow::new(1900, 36460174, 2261192, 38721366),
    ReferenceRow::new(2000, 40391978, 2505328, 42897306),
    ReferenceRow::new(2100, 44542482, 2762328, 47304810),
    ReferenceRow::new(2200, 48877878, 3031440, 51909318),
    ReferenceRow::new(2300, 53433334, 3313344, 56746678),
    ReferenceRow::new(2400, 58172210, 3607600, 61779810),
    ReferenceRow::new(2500, 63132842, 3914608, 67047450),
    ReferenceRow::new(2600, 68275238, 4234008, 72509246),
    ReferenceRow::new(3000, 90906366, 5637120, 96543486),
    ReferenceRow::new(3500, 123729002, 7672616, 131401618),
    ReferenceRow::new(4000, 161600518, 10021480, 171621998),
    ReferenceRow::new(4500, 204521258, 12683288, 217204546),
    ReferenceRow::new(5000, 252490950, 15658504, 268149454),
    ReferenceRow::new(5500, 305509450, 18946648, 324456098),
    ReferenceRow::new(6000, 363576838, 22548008, 386124846),
    ReferenceRow::new(6500, 426693594, 26462560, 453156154),
    ReferenceRow::new(7000, 494859006, 30690136, 525549142),
    ReferenceRow::new(7500, 568134414, 35231256, 603365670),
    ReferenceRow::new(8000, 646401914, 40085200, 686487114),
    ReferenceRow::new(8500, 729718814, 45252704, 774971518),
    ReferenceRow::new(9000, 818084450, 50732656, 868817106),
    ReferenceRow::new(9500, 911499582, 56526944, 968026526),
    ReferenceRow::new(10000, 1009962778, 62620784, 1072583562),
];

/// Hollow sphere absentee ratio, 6 decimal places.
pub const SPHERE_RATIOS: &[(u32, &str)] = &[
    (2, "0.148148"),
    (3, "0.088889"),
    (4, "0.044944"),
    (5, "0.086331"),
    (6, "0.067797"),
    (7, "0.074349"),
    (8, "0.061162"),
    (9, "0.054670"),
    (10, "0.073937"),
    (11, "0.059435"),
    (12, "0.061617"),
    (13, "0.063277"),
    (14, "0.060094"),
    (15, "0.060453"),
    (16, "0.054637"),
    (17, "0.059393"),
    (18, "0.063269"),
    (19, "0.061507"),
    (20, "0.060463"),
    (30, "0.058811"),
    (40, "0.058640"),
    (50, "0.059037"),
    (60, "0.059276"),
    (70, "0.058566"),
    (80, "0.058262"),
    (90, "0.058618"),
    (100, "0.058464"),
    (120, "0.058367"),
    (140, "0.058532"),
    (160, "0.058495"),
    (180, "0.058313"),
    (200, "0.058468"),
    (300, "0.058389"),
    (400, "0.058407"),
    (500, "0.058412"),
    (600, "0.058353"),
    (700, "0.058418"),
    (800, "0.058403"),
    (900, "0.058390"),
    (1000, "0.058401"),
    (1100, "0.058381"),
    (1200, "0.058404"),
    (1300, "0.058405"),
    (1500, "0.058399"),
    (1600, "0.058387"),
    (1700, "0.058401"),
    (1800, "0.058382"),
    (1900, "0.058397"),
    (2000, "0.058403"),
    (2500, "0.058386"),
    (3000, "0.058389"),
    (3500, "0.058391"),
    (4000, "0.058393"),
    (4500, "0.058393"),
    (5000, "0.058395"),
    (6000, "0.058396"),
    (7000, "0.058396"),
    (8000, "0.058392"),
    (9000, "0.058393"),
    (10000, "0.058383"),
];

/// Solid sphere counts: union of complete spheres, absentees, completed solid.
pub const SOLID_COUNTS: &[ReferenceRow] = &[
    ReferenceRow::new(0, 1, 0, 1),
    ReferenceRow::new(1, 7, 0, 7),
    ReferenceRow::new(2, 53, 20, 73),
    ReferenceRow::new(3, 143, 20, 163),
    ReferenceRow::new(4, 321, 20, 341),
    ReferenceRow::new(5, 591, 132, 723),
    ReferenceRow::new(6, 945, 132, 1077),
    ReferenceRow::new(7, 1483, 276, 1759),
    ReferenceRow::new(8, 2153, 276, 2429),
    ReferenceRow::new(9, 3039, 360, 3399),
    ReferenceRow::new(10, 4121, 752, 4873),
    ReferenceRow::new(20, 31377, 4192, 35569),
    ReferenceRow::new(30, 104321, 13144, 117465),
    ReferenceRow::new(40, 245349, 31412, 276761),
    ReferenceRow::new(50, 477061, 60436, 537497),
    ReferenceRow::new(60, 821805, 103604, 925409),
    ReferenceRow::new(70, 1303165, 159636, 1462801),
    ReferenceRow::new(80, 1941629, 233828, 2175457),
    ReferenceRow::new(90, 2761237, 333428, 3094665),
    ReferenceRow::new(100, 3785733, 452052, 4237785),
    ReferenceRow::new(150, 12749489, 1508868, 14258357),
    ReferenceRow::new(200, 30196125, 3528744, 33724869),
    ReferenceRow::new(250, 58952525, 6810356, 65762881),
    ReferenceRow::new(300, 101848409, 11688640, 113537049),
    ReferenceRow::new(350, 161726089, 18514264, 180240353),
    ReferenceRow::new(400, 241406453, 27530128, 268936581),
    ReferenceRow::new(450, 343714485, 39030584, 382745069),
    ReferenceRow::new(500, 471497269, 53389448, 524886717),
    ReferenceRow::new(550, 627583253, 70890036, 698473289),
    ReferenceRow::new(600, 814799465, 91803032, 906602497),
    ReferenceRow::new(650, 1035980249, 116498872, 1152479121),
    ReferenceRow::new(700, 1293980265, 145396532, 1439376797),
    ReferenceRow::new(750, 1591598569, 178467668, 1770066237),
    ReferenceRow::new(800, 1931678709, 216171360, 2147850069),
];

/// Solid sphere absentee ratio, 5 decimal places.
pub const SOLID_RATIOS: &[(u32, &str)] = &[
    (2, "0.27397"),
    (3, "0.12270"),
    (4, "0.05865"),
    (5, "0.18257"),
    (6, "0.12256"),
    (7, "0.15691"),
    (8, "0.11363"),
    (9, "0.10591"),
    (10, "0.15432"),
    (11, "0.12030"),
    (12, "0.12264"),
    (13, "0.12249"),
    (14, "0.12018"),
    (15, "0.11719"),
    (16, "0.10654"),
    (17, "0.11685"),
    (18, "0.12414"),
    (19, "0.12345"),
    (20, "0.11786"),
    (30, "0.11190"),
    (40, "0.11350"),
    (50, "0.11244"),
    (60, "0.11195"),
    (70, "0.10913"),
    (80, "0.10748"),
    (90, "0.10774"),
    (100, "0.10667"),
    (110, "0.10661"),
    (120, "0.10654"),
    (130, "0.10620"),
    (140, "0.10606"),
    (150, "0.10582"),
    (160, "0.10523"),
    (170, "0.10482"),
    (180, "0.10482"),
    (190, "0.10463"),
    (200, "0.10463"),
    (220, "0.10403"),
    (240, "0.10368"),
    (260, "0.10361"),
    (280, "0.10328"),
    (300, "0.10295"),
    (320, "0.10300"),
    (340, "0.10283"),
    (360, "0.10250"),
    (380, "0.10233"),
    (400, "0.10237"),
    (420, "0.10219"),
    (450, "0.10198"),
    (500, "0.10172"),
    (550, "0.10149"),
    (600, "0.10126"),
    (650, "0.10109"),
    (700, "0.10101"),
    (750, "0.10083"),
    (800, "0.10065"),
];

pub fn sphere_row(r: u32) -> Option<&'static ReferenceRow> {
    SPHERE_COUNTS.iter().find(|row| row.r == r)
}

pub fn solid_row(r: u32) -> Option<&'static ReferenceRow> {
    SOLID_COUNTS.iter().find(|row| row.r == r)
}
