#!/usr/bin/env python3
"""Regenerate the bundled lookup tables and the archived snapshot fixtures.

Outputs (all committed to the repo; rerun only when editing the tables):

    src/epitrack/data/aliases.csv      raw feed names -> canonical regions;
                                       the first row per region is its
                                       display name
    src/epitrack/data/continents.csv   country -> continent group
    src/epitrack/data/population.csv   country -> population (static, 2019)
    tests/fixtures/world_20200410.csv  world snapshot, canonical CSV format
    tests/fixtures/dxy_20200410.json   China snapshot, area-record format
    tests/fixtures/bad_rows.csv        malformed lines for validate tests

Fixture counts are synthetic but sized like the real April 2020 situation:
about 190 reporting countries, seven-figure confirmed total, five-figure
death toll. The world file deliberately contains intra-day duplicates, a
few cumulative regressions, reporting gaps, and one unresolvable country
so the cleaning pipeline has something to do.
"""

from __future__ import annotations

import json
import random
from datetime import date, timedelta
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = ROOT / "src" / "epitrack" / "data"
FIXTURE_DIR = ROOT / "tests" / "fixtures"

END = date(2020, 4, 10)
START = date(2020, 3, 15)
ALL_DATES = [START + timedelta(days=i) for i in range((END - START).days + 1)]

# code, display name, continent, population (approx 2019), extra aliases
COUNTRIES = [
    # Europe
    ("AL", "Albania", "Europe", 2880917, ()),
    ("AD", "Andorra", "Europe", 77142, ()),
    ("AT", "Austria", "Europe", 8955102, ()),
    ("BY", "Belarus", "Europe", 9452411, ()),
    ("BE", "Belgium", "Europe", 11539328, ()),
    ("BA", "Bosnia and Herzegovina", "Europe", 3301000, ()),
    ("BG", "Bulgaria", "Europe", 7000119, ()),
    ("HR", "Croatia", "Europe", 4067500, ()),
    ("CY", "Cyprus", "Europe", 1198575, ()),
    ("CZ", "Czechia", "Europe", 10649800, ("Czech Republic",)),
    ("DK", "Denmark", "Europe", 5806081, ()),
    ("EE", "Estonia", "Europe", 1326590, ()),
    ("FI", "Finland", "Europe", 5520314, ()),
    ("FR", "France", "Europe", 67059887, ()),
    ("DE", "Germany", "Europe", 83132799, ()),
    ("GR", "Greece", "Europe", 10716322, ()),
    ("HU", "Hungary", "Europe", 9769949, ()),
    ("IS", "Iceland", "Europe", 361313, ()),
    ("IE", "Ireland", "Europe", 4941444, ()),
    ("IT", "Italy", "Europe", 60359546, ()),
    ("XK", "Kosovo", "Europe", 1794248, ()),
    ("LV", "Latvia", "Europe", 1912789, ()),
    ("LI", "Liechtenstein", "Europe", 38019, ()),
    ("LT", "Lithuania", "Europe", 2786844, ()),
    ("LU", "Luxembourg", "Europe", 619896, ()),
    ("MT", "Malta", "Europe", 502653, ()),
    ("MD", "Moldova", "Europe", 2657637, ("Republic of Moldova",)),
    ("MC", "Monaco", "Europe", 38964, ()),
    ("ME", "Montenegro", "Europe", 622137, ()),
    ("NL", "Netherlands", "Europe", 17332850, ("The Netherlands",)),
    ("MK", "North Macedonia", "Europe", 2083459, ("Macedonia",)),
    ("NO", "Norway", "Europe", 5347896, ()),
    ("PL", "Poland", "Europe", 37970874, ()),
    ("PT", "Portugal", "Europe", 10269417, ()),
    ("RO", "Romania", "Europe", 19356544, ()),
    ("RU", "Russia", "Europe", 144373535, ("Russian Federation",)),
    ("SM", "San Marino", "Europe", 33860, ()),
    ("RS", "Serbia", "Europe", 6944975, ()),
    ("SK", "Slovakia", "Europe", 5454073, ()),
    ("SI", "Slovenia", "Europe", 2087946, ()),
    ("ES", "Spain", "Europe", 46937060, ()),
    ("SE", "Sweden", "Europe", 10285453, ()),
    ("CH", "Switzerland", "Europe", 8574832, ()),
    ("UA", "Ukraine", "Europe", 44385155, ()),
    ("GB", "United Kingdom", "Europe", 66647112, ("UK", "Great Britain")),
    ("VA", "Holy See", "Europe", 809, ("Vatican City",)),
    # Asia
    ("AF", "Afghanistan", "Asia", 38041754, ()),
    ("AM", "Armenia", "Asia", 2957731, ()),
    ("AZ", "Azerbaijan", "Asia", 10023318, ()),
    ("BH", "Bahrain", "Asia", 1641172, ()),
    ("BD", "Bangladesh", "Asia", 163046161, ()),
    ("BT", "Bhutan", "Asia", 763092, ()),
    ("BN", "Brunei", "Asia", 433285, ("Brunei Darussalam",)),
    ("KH", "Cambodia", "Asia", 16486542, ()),
    ("CN", "China", "Asia", 1397715000, ("Mainland China", "中国")),
    ("GE", "Georgia", "Asia", 3720382, ()),
    ("IN", "India", "Asia", 1366417754, ()),
    ("ID", "Indonesia", "Asia", 270625568, ()),
    ("IR", "Iran", "Asia", 82913906, ("Iran (Islamic Republic of)",)),
    ("IQ", "Iraq", "Asia", 39309783, ()),
    ("IL", "Israel", "Asia", 9053300, ()),
    ("JP", "Japan", "Asia", 126264931, ()),
    ("JO", "Jordan", "Asia", 10101694, ()),
    ("KZ", "Kazakhstan", "Asia", 18513930, ()),
    ("KW", "Kuwait", "Asia", 4207083, ()),
    ("KG", "Kyrgyzstan", "Asia", 6456900, ()),
    ("LA", "Laos", "Asia", 7169455, ()),
    ("LB", "Lebanon", "Asia", 6855713, ()),
    ("MY", "Malaysia", "Asia", 31949777, ()),
    ("MV", "Maldives", "Asia", 530953, ()),
    ("MN", "Mongolia", "Asia", 3225167, ()),
    ("MM", "Myanmar", "Asia", 54045420, ("Burma",)),
    ("NP", "Nepal", "Asia", 28608710, ()),
    ("OM", "Oman", "Asia", 4974986, ()),
    ("PK", "Pakistan", "Asia", 216565318, ()),
    ("PS", "Palestine", "Asia", 4981420, ("West Bank and Gaza",)),
    ("PH", "Philippines", "Asia", 108116615, ()),
    ("QA", "Qatar", "Asia", 2832067, ()),
    ("SA", "Saudi Arabia", "Asia", 34268528, ()),
    ("SG", "Singapore", "Asia", 5703569, ()),
    ("KR", "South Korea", "Asia", 51709098, ("Korea South", "Republic of Korea")),
    ("LK", "Sri Lanka", "Asia", 21803000, ()),
    ("SY", "Syria", "Asia", 17070135, ()),
    ("TW", "Taiwan", "Asia", 23773876, ("Taiwan*", "Taipei and environs")),
    ("TJ", "Tajikistan", "Asia", 9321018, ()),
    ("TH", "Thailand", "Asia", 69625582, ()),
    ("TL", "Timor-Leste", "Asia", 1293119, ("East Timor",)),
    ("TR", "Turkey", "Asia", 83429615, ()),
    ("TM", "Turkmenistan", "Asia", 5942089, ()),
    ("AE", "United Arab Emirates", "Asia", 9770529, ("UAE",)),
    ("UZ", "Uzbekistan", "Asia", 33580650, ()),
    ("VN", "Vietnam", "Asia", 96462106, ("Viet Nam",)),
    ("YE", "Yemen", "Asia", 29161922, ()),
    # Africa
    ("DZ", "Algeria", "Africa", 43053054, ()),
    ("AO", "Angola", "Africa", 31825295, ()),
    ("BJ", "Benin", "Africa", 11801151, ()),
    ("BW", "Botswana", "Africa", 2303697, ()),
    ("BF", "Burkina Faso", "Africa", 20321378, ()),
    ("BI", "Burundi", "Africa", 11530580, ()),
    ("CM", "Cameroon", "Africa", 25876380, ()),
    ("CV", "Cabo Verde", "Africa", 549935, ("Cape Verde",)),
    ("CF", "Central African Republic", "Africa", 4745185, ()),
    ("TD", "Chad", "Africa", 15946876, ()),
    ("KM", "Comoros", "Africa", 850886, ()),
    ("CG", "Congo (Brazzaville)", "Africa", 5380508, ("Republic of the Congo",)),
    ("CD", "Congo (Kinshasa)", "Africa", 86790567, ("Democratic Republic of the Congo", "DR Congo")),
    ("CI", "Cote d'Ivoire", "Africa", 25716544, ("Ivory Coast",)),
    ("DJ", "Djibouti", "Africa", 973560, ()),
    ("EG", "Egypt", "Africa", 100388073, ()),
    ("GQ", "Equatorial Guinea", "Africa", 1355986, ()),
    ("ER", "Eritrea", "Africa", 3497117, ()),
    ("SZ", "Eswatini", "Africa", 1148130, ("Swaziland",)),
    ("ET", "Ethiopia", "Africa", 112078730, ()),
    ("GA", "Gabon", "Africa", 2172579, ()),
    ("GM", "Gambia", "Africa", 2347706, ("The Gambia",)),
    ("GH", "Ghana", "Africa", 30417856, ()),
    ("GN", "Guinea", "Africa", 12771246, ()),
    ("GW", "Guinea-Bissau", "Africa", 1920922, ()),
    ("KE", "Kenya", "Africa", 52573973, ()),
    ("LS", "Lesotho", "Africa", 2125268, ()),
    ("LR", "Liberia", "Africa", 4937374, ()),
    ("LY", "Libya", "Africa", 6777452, ()),
    ("MG", "Madagascar", "Africa", 26969307, ()),
    ("MW", "Malawi", "Africa", 18628747, ()),
    ("ML", "Mali", "Africa", 19658031, ()),
    ("MR", "Mauritania", "Africa", 4525696, ()),
    ("MU", "Mauritius", "Africa", 1265711, ()),
    ("MA", "Morocco", "Africa", 36471769, ()),
    ("MZ", "Mozambique", "Africa", 30366036, ()),
    ("NA", "Namibia", "Africa", 2494530, ()),
    ("NE", "Niger", "Africa", 23310715, ()),
    ("NG", "Nigeria", "Africa", 200963599, ()),
    ("RW", "Rwanda", "Africa", 12626950, ()),
    ("ST", "Sao Tome and Principe", "Africa", 215056, ()),
    ("SN", "Senegal", "Africa", 16296364, ()),
    ("SC", "Seychelles", "Africa", 97625, ()),
    ("SL", "Sierra Leone", "Africa", 7813215, ()),
    ("SO", "Somalia", "Africa", 15442905, ()),
    ("ZA", "South Africa", "Africa", 58558270, ()),
    ("SS", "South Sudan", "Africa", 11062113, ()),
    ("SD", "Sudan", "Africa", 42813238, ()),
    ("TZ", "Tanzania", "Africa", 58005463, ()),
    ("TG", "Togo", "Africa", 8082366, ()),
    ("TN", "Tunisia", "Africa", 11694719, ()),
    ("UG", "Uganda", "Africa", 44269594, ()),
    ("ZM", "Zambia", "Africa", 17861030, ()),
    ("ZW", "Zimbabwe", "Africa", 14645468, ()),
    # North America
    ("AG", "Antigua and Barbuda", "NorthAmerica", 97118, ()),
    ("BS", "Bahamas", "NorthAmerica", 389482, ("The Bahamas",)),
    ("BB", "Barbados", "NorthAmerica", 287025, ()),
    ("BZ", "Belize", "NorthAmerica", 390353, ()),
    ("CA", "Canada", "NorthAmerica", 37589262, ()),
    ("CR", "Costa Rica", "NorthAmerica", 5047561, ()),
    ("CU", "Cuba", "NorthAmerica", 11333483, ()),
    ("DM", "Dominica", "NorthAmerica", 71808, ()),
    ("DO", "Dominican Republic", "NorthAmerica", 10738958, ()),
    ("SV", "El Salvador", "NorthAmerica", 6453553, ()),
    ("GD", "Grenada", "NorthAmerica", 112003, ()),
    ("GT", "Guatemala", "NorthAmerica", 16604026, ()),
    ("HT", "Haiti", "NorthAmerica", 11263077, ()),
    ("HN", "Honduras", "NorthAmerica", 9746117, ()),
    ("JM", "Jamaica", "NorthAmerica", 2948279, ()),
    ("MX", "Mexico", "NorthAmerica", 127575529, ()),
    ("NI", "Nicaragua", "NorthAmerica", 6545502, ()),
    ("PA", "Panama", "NorthAmerica", 4246439, ()),
    ("KN", "Saint Kitts and Nevis", "NorthAmerica", 52823, ()),
    ("LC", "Saint Lucia", "NorthAmerica", 182790, ()),
    ("VC", "Saint Vincent and the Grenadines", "NorthAmerica", 110589, ()),
    ("TT", "Trinidad and Tobago", "NorthAmerica", 1394973, ()),
    ("US", "United States", "NorthAmerica", 328239523, ("US", "USA", "United States of America")),
    # South America
    ("AR", "Argentina", "SouthAmerica", 44938712, ()),
    ("BO", "Bolivia", "SouthAmerica", 11513100, ()),
    ("BR", "Brazil", "SouthAmerica", 211049527, ()),
    ("CL", "Chile", "SouthAmerica", 18952038, ()),
    ("CO", "Colombia", "SouthAmerica", 50339443, ()),
    ("EC", "Ecuador", "SouthAmerica", 17373662, ()),
    ("GY", "Guyana", "SouthAmerica", 782766, ()),
    ("PY", "Paraguay", "SouthAmerica", 7044636, ()),
    ("PE", "Peru", "SouthAmerica", 32510453, ()),
    ("SR", "Suriname", "SouthAmerica", 581372, ()),
    ("UY", "Uruguay", "SouthAmerica", 3461734, ()),
    ("VE", "Venezuela", "SouthAmerica", 28515829, ()),
    # Oceania
    ("AU", "Australia", "Oceania", 25364307, ()),
    ("FJ", "Fiji", "Oceania", 889953, ()),
    ("NZ", "New Zealand", "Oceania", 4917000, ()),
    ("PG", "Papua New Guinea", "Oceania", 8776109, ()),
    ("WS", "Samoa", "Oceania", 197097, ()),
    ("SB", "Solomon Islands", "Oceania", 669823, ()),
    ("TO", "Tonga", "Oceania", 104494, ()),
    ("VU", "Vanuatu", "Oceania", 299882, ()),
]

# Synthetic country-level regions (user-assigned ISO range); no population.
SYNTHETIC = [
    ("XD", "Diamond Princess", "Other", ("Cruise Ship Diamond Princess",)),
    ("XZ", "MS Zaandam", "Other", ("Cruise Ship MS Zaandam",)),
]

# Confirmed / cured / deaths anchors on 2020-04-10 for the hardest-hit
# countries; everything else is derived from a seeded RNG.
ANCHORS = {
    "US": (496535, 28790, 18586),
    "ES": (158273, 55668, 16081),
    "IT": (147577, 30455, 18849),
    "FR": (125931, 26391, 13215),
    "DE": (122171, 53913, 2767),
    "CN": (81907, 77455, 3336),
    "GB": (74605, 344, 8974),
    "IR": (68192, 35465, 4232),
    "TR": (47029, 2423, 1006),
    "BE": (26667, 5568, 3019),
    "CH": (24551, 9800, 1002),
    "NL": (23249, 287, 2511),
    "CA": (22148, 6013, 569),
    "BR": (19638, 173, 1057),
    "PT": (15472, 233, 435),
    "AT": (13555, 6064, 319),
    "RU": (11917, 795, 94),
    "KR": (10480, 7243, 211),
    "IL": (10408, 1183, 95),
    "SE": (9685, 381, 870),
    "IE": (8089, 25, 287),
    "IN": (7600, 774, 249),
    "EC": (7161, 368, 297),
    "CL": (6501, 1571, 65),
    "NO": (6314, 32, 113),
    "AU": (6215, 1793, 54),
    "PL": (5955, 318, 181),
    "PE": (5897, 1569, 169),
    "DK": (5830, 1773, 237),
    "CZ": (5732, 346, 119),
    "JP": (5530, 685, 99),
    "RO": (5467, 729, 270),
    "PK": (4695, 727, 66),
    "MY": (4346, 1830, 70),
    "PH": (4195, 140, 221),
    "MX": (3844, 633, 233),
    "SA": (3651, 685, 47),
    "ID": (3512, 282, 306),
    "AE": (3360, 418, 16),
    "LU": (3270, 486, 62),
    "RS": (3105, 278, 71),
    "TH": (2473, 1013, 33),
    "DO": (2620, 98, 126),
    "SG": (2108, 492, 7),
    "EG": (1794, 384, 135),
    "XD": (712, 619, 12),
    "XZ": (9, 0, 2),
    "YE": (1, 0, 0),
}

# DXY-format province data: chinese name, short name, canonical name,
# confirmed / cured / deaths on 2020-04-10.
CN_PROVINCES = [
    ("湖北省", "湖北", "Hubei", 67803, 64435, 3222),
    ("广东省", "广东", "Guangdong", 1566, 1408, 8),
    ("河南省", "河南", "Henan", 1276, 1263, 22),
    ("浙江省", "浙江", "Zhejiang", 1267, 1222, 1),
    ("湖南省", "湖南", "Hunan", 1019, 1014, 4),
    ("安徽省", "安徽", "Anhui", 991, 984, 6),
    ("江西省", "江西", "Jiangxi", 937, 932, 1),
    ("山东省", "山东", "Shandong", 784, 756, 7),
    ("江苏省", "江苏", "Jiangsu", 653, 631, 0),
    ("重庆市", "重庆", "Chongqing", 579, 570, 6),
    ("四川省", "四川", "Sichuan", 558, 536, 3),
    ("黑龙江省", "黑龙江", "Heilongjiang", 482, 469, 13),
    ("北京市", "北京", "Beijing", 588, 465, 8),
    ("上海市", "上海", "Shanghai", 628, 522, 7),
    ("河北省", "河北", "Hebei", 327, 310, 6),
    ("福建省", "福建", "Fujian", 353, 295, 1),
    ("广西壮族自治区", "广西", "Guangxi", 254, 250, 2),
    ("陕西省", "陕西", "Shaanxi", 256, 246, 3),
    ("云南省", "云南", "Yunnan", 184, 172, 2),
    ("海南省", "海南", "Hainan", 168, 162, 6),
    ("贵州省", "贵州", "Guizhou", 146, 144, 2),
    ("天津市", "天津", "Tianjin", 180, 145, 3),
    ("山西省", "山西", "Shanxi", 197, 133, 0),
    ("辽宁省", "辽宁", "Liaoning", 145, 122, 2),
    ("吉林省", "吉林", "Jilin", 102, 92, 1),
    ("甘肃省", "甘肃", "Gansu", 139, 131, 2),
    ("新疆维吾尔自治区", "新疆", "Xinjiang", 76, 73, 3),
    ("内蒙古自治区", "内蒙古", "Inner Mongolia", 117, 75, 1),
    ("宁夏回族自治区", "宁夏", "Ningxia", 75, 75, 0),
    ("青海省", "青海", "Qinghai", 18, 18, 0),
    ("西藏自治区", "西藏", "Tibet", 1, 1, 0),
    ("香港", "香港", "Hong Kong", 989, 331, 4),
    ("澳门", "澳门", "Macau", 45, 10, 0),
]

HUBEI_CITIES = [
    ("武汉市", "Wuhan", 50008, 46991, 2579),
    ("孝感市", "Xiaogan", 3518, 3416, 129),
    ("黄冈市", "Huanggang", 2907, 2791, 125),
    ("荆州市", "Jingzhou", 1580, 1526, 52),
    ("鄂州市", "Ezhou", 1394, 1333, 59),
    ("随州市", "Suizhou", 1307, 1256, 45),
    ("襄阳市", "Xiangyang", 1175, 1135, 40),
    ("黄石市", "Huangshi", 1015, 976, 39),
    ("宜昌市", "Yichang", 931, 895, 36),
    ("荆门市", "Jingmen", 928, 887, 41),
    ("咸宁市", "Xianning", 836, 821, 15),
    ("十堰市", "Shiyan", 672, 664, 8),
    ("仙桃市", "Xiantao", 575, 553, 22),
    ("天门市", "Tianmen", 496, 481, 15),
    ("恩施土家族苗族自治州", "Enshi", 252, 246, 7),
    ("潜江市", "Qianjiang", 198, 189, 9),
    ("神农架林区", "Shennongjia", 11, 11, 0),
]


def write_tables() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    lines = ["raw_name,country,province,city"]
    for code, name, _continent, _pop, extras in COUNTRIES:
        lines.append(f"{name},{code},,")
        lines.append(f"{code},{code},,")
        for alias in extras:
            lines.append(f"{alias},{code},,")
    for code, name, _continent, extras in SYNTHETIC:
        lines.append(f"{name},{code},,")
        lines.append(f"{code},{code},,")
        for alias in extras:
            lines.append(f"{alias},{code},,")
    for full, short, canonical, *_ in CN_PROVINCES:
        lines.append(f"{full},CN,{canonical},")
        if short != full:
            lines.append(f"{short},CN,{canonical},")
    for raw, canonical, *_ in HUBEI_CITIES:
        lines.append(f"{raw},CN,Hubei,{canonical}")
    (DATA_DIR / "aliases.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["country,continent"]
    for code, _name, continent, _pop, _extras in COUNTRIES:
        lines.append(f"{code},{continent}")
    for code, _name, continent, _extras in SYNTHETIC:
        lines.append(f"{code},{continent}")
    (DATA_DIR / "continents.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["country,population,source_year"]
    for code, _name, _continent, pop, _extras in COUNTRIES:
        lines.append(f"{code},{pop},2019")
    (DATA_DIR / "population.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")


def backfill(end_value: int, growth: float, n_days: int) -> list[int]:
    """Cumulative series ending at end_value, shrinking backward by growth."""
    out = []
    for k in range(n_days - 1, -1, -1):
        out.append(int(round(end_value / (growth**k))))
    return out


def country_series(rng: random.Random, code: str, population: int | None):
    if code in ANCHORS:
        conf_end, cured_end, dead_end = ANCHORS[code]
    else:
        scale = min((population or 1_000_000) / 1_000_000, 60.0)
        conf_end = max(5, int(rng.lognormvariate(4.2, 1.1) * max(scale, 0.3)))
        conf_end = min(conf_end, 2800)
        cured_end = int(conf_end * rng.uniform(0.04, 0.40))
        dead_end = int(conf_end * rng.uniform(0.01, 0.06))

    if code in ("CN", "KR"):  # post-peak, nearly flat
        g_conf, g_cured, g_dead = 1.0015, 1.012, 1.004
    else:
        g_conf = rng.uniform(1.07, 1.22)
        g_cured = rng.uniform(1.10, 1.30)
        g_dead = rng.uniform(1.08, 1.24)

    if code in ANCHORS and ANCHORS[code][0] > 40000:
        start = START
    else:
        start = START + timedelta(days=rng.randint(0, 10))
    dates = [d for d in ALL_DATES if d >= start]

    conf = backfill(conf_end, g_conf, len(dates))
    cured = backfill(cured_end, g_cured, len(dates))
    dead = backfill(dead_end, g_dead, len(dates))

    # occasional reporting gaps on interior days
    if code not in ANCHORS and rng.random() < 0.22 and len(dates) > 6:
        for _ in range(rng.randint(1, 2)):
            i = rng.randint(1, len(dates) - 2)
            del dates[i], conf[i], cured[i], dead[i]

    return dates, conf, cured, dead


def observed_time(rng: random.Random) -> str:
    return f"{rng.randint(6, 23):02d}:{rng.randint(0, 59):02d}:00"


def write_world_csv() -> None:
    rng = random.Random(20200410)
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    rows: list[tuple[str, str, str]] = []  # (date iso, time, rest-of-line)

    feed_names = {"CN": "Mainland China", "US": "US", "KR": "Korea South"}

    for code, name, _continent, pop, _extras in COUNTRIES:
        feed_name = feed_names.get(code, name)
        if code == "YE":
            # first positive report on the last day, zeros before
            for d in [END - timedelta(days=5 - i) for i in range(5)]:
                rows.append((d.isoformat(), observed_time(rng), f"{feed_name},,,0,0,0"))
            rows.append((END.isoformat(), observed_time(rng), f"{feed_name},,,1,0,0"))
            continue
        dates, conf, cured, dead = country_series(rng, code, pop)

        if code == "ES":  # cumulative regression: cured corrected downward once
            i = dates.index(date(2020, 4, 3))
            cured[i] = max(cured[i - 1] - 120, 0)
        if code == "FR":  # deaths regression
            i = dates.index(date(2020, 3, 28))
            dead[i] = max(dead[i - 1] - 35, 0)

        for i, d in enumerate(dates):
            rows.append(
                (d.isoformat(), observed_time(rng), f"{feed_name},,,{conf[i]},{cured[i]},{dead[i]}")
            )
            if code == "IT" and d == date(2020, 4, 5):
                # intra-day duplicate; the later report must win
                rows.append((d.isoformat(), "08:00:00", f"{feed_name},,,{conf[i] - 900},{cured[i] - 200},{dead[i] - 60}"))
                rows[-2] = (d.isoformat(), "20:00:00", rows[-2][2])
            if code == "GR" and d == date(2020, 4, 1):
                # same-timestamp duplicate; the larger counts must win
                rows.append((d.isoformat(), rows[-1][1], f"{feed_name},,,{max(conf[i] - 5, 0)},{cured[i]},{dead[i]}"))

    for code, name, _continent, _extras in SYNTHETIC:
        dates, conf, cured, dead = country_series(rng, code, None)
        for i, d in enumerate(dates):
            rows.append((d.isoformat(), observed_time(rng), f"{name},,,{conf[i]},{cured[i]},{dead[i]}"))

    # one unresolvable country name; lands in the quarantine bucket
    rows.append((END.isoformat(), "12:00:00", "Atlantis,,,4,0,0"))

    rows.sort(key=lambda r: (r[0], r[2].split(",")[0], r[1]))
    lines = ["observed_at,country,province,city,confirmed,cured,deaths"]
    lines += [f"{d}T{t}Z,{rest}" for d, t, rest in rows]
    (FIXTURE_DIR / "world_20200410.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")


def province_series(rng: random.Random, end_values: tuple[int, int, int], n_days: int):
    conf_end, cured_end, dead_end = end_values
    conf_start = int(conf_end * rng.uniform(0.955, 0.995))
    cured_start = int(cured_end * rng.uniform(0.70, 0.90))
    dead_start = int(dead_end * rng.uniform(0.92, 1.00))
    series = []
    for i in range(n_days):
        f = i / (n_days - 1)
        series.append(
            (
                int(round(conf_start + (conf_end - conf_start) * f)),
                int(round(cured_start + (cured_end - cured_start) * f)),
                int(round(dead_start + (dead_end - dead_start) * f)),
            )
        )
    return series


def write_dxy_json() -> None:
    rng = random.Random(76)
    n_days = len(ALL_DATES)
    records = []

    city_series = {
        canon: province_series(rng, (c, r, d), n_days)
        for _raw, canon, c, r, d in HUBEI_CITIES
    }

    for full, _short, canonical, conf, cured, dead in CN_PROVINCES:
        series = province_series(rng, (conf, cured, dead), n_days)
        if canonical == "Heilongjiang":
            # cured corrected downward once; repair must flag it
            day = ALL_DATES.index(date(2020, 3, 25))
            c0, r0, d0 = series[day]
            series[day] = (c0, max(r0 - 9, 0), d0)
        for i, d in enumerate(ALL_DATES):
            if canonical == "Hubei" and d == END:
                # archived headline record: exactly midnight UTC
                update_ms = 1586476800000
            else:
                hour, minute = rng.randint(1, 23), rng.randint(0, 59)
                epoch = (d - date(1970, 1, 1)).days * 86400 + hour * 3600 + minute * 60
                update_ms = epoch * 1000
            ci, ri, di = series[i] if d != END else (conf, cured, dead)
            record = {
                "provinceName": full,
                "provinceShortName": _short,
                "confirmedCount": ci,
                "curedCount": ri,
                "deadCount": di,
                "updateTime": update_ms,
            }
            if canonical == "Hubei":
                record["cities"] = [
                    {
                        "cityName": raw,
                        "confirmedCount": city_series[canon][i][0],
                        "curedCount": city_series[canon][i][1],
                        "deadCount": city_series[canon][i][2],
                    }
                    for raw, canon, *_ in HUBEI_CITIES
                ]
            records.append(record)

    # one record without a province name: parsers must skip and tally it
    records.append({"confirmedCount": 10, "curedCount": 0, "deadCount": 0, "updateTime": 1586479500000})

    out = json.dumps(records, ensure_ascii=False, indent=1)
    (FIXTURE_DIR / "dxy_20200410.json").write_text(out + "\n", encoding="utf-8")


def write_bad_rows() -> None:
    lines = [
        "observed_at,country,province,city,confirmed,cured,deaths",
        "2020-04-10T00:00:00Z,Italy,,,147577,30455,18849",
        "2020-04-10T00:00:00Z,Italy,,,-1,0,0",
        "2020-04-10T00:00:00Z,France,,,abc,0,0",
        "not-a-date,Spain,,,10,0,0",
    ]
    (FIXTURE_DIR / "bad_rows.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    write_tables()
    write_world_csv()
    write_dxy_json()
    write_bad_rows()
    print("wrote", DATA_DIR, "and", FIXTURE_DIR)
