#!/usr/bin/env python3
"""Writes an invented base corpus of company seeds.

Every name carries at least one coined word that no other row uses and that
never occurs in the city, region or description vocabulary, so no row's
token set is contained in another's.
"""

import argparse
import csv
import random

ONSETS = ["b", "br", "c", "cr", "d", "dr", "f", "fl", "g", "gr", "h", "j", "k",
          "kl", "l", "m", "n", "p", "pr", "qu", "r", "s", "st", "t", "tr", "v",
          "w", "z", "sh", "th", "v", "x"]
VOWELS = ["a", "e", "i", "o", "u", "ai", "ea", "io", "ou", "y", "ae"]
CODAS = ["", "", "n", "r", "x", "s", "l", "m", "nt", "st", "rd", "v"]
ENDINGS = ["ix", "on", "ia", "ex", "um", "ara", "ent", "ora", "is", "", "", ""]
ACCENTED = {"e": "é", "u": "ü", "o": "ö", "a": "å"}

SECTORS = ["Labs", "Systems", "Energy", "Capital", "Partners", "Therapeutics",
           "Robotics", "Foods", "Logistics", "Analytics", "Media", "Health",
           "Networks", "Minerals", "Pharma", "Software", "Motors", "Bank",
           "Insurance", "Ventures", "Solutions", "Technologies", "Biosciences",
           "Retail", "Airlines", "Shipping", "Resources", "Semiconductors",
           "Studios", "Brands", "Materials", "Aerospace", "Water", "Textiles"]

CITIES = [
    ("Zurich", "Zurich", "CH"), ("Geneva", "Geneva", "CH"), ("Basel", "Basel-Stadt", "CH"),
    ("London", "England", "GB"), ("Manchester", "England", "GB"), ("Edinburgh", "Scotland", "GB"),
    ("Berlin", "Berlin", "DE"), ("Munich", "Bavaria", "DE"), ("Hamburg", "Hamburg", "DE"),
    ("Paris", "Ile-de-France", "FR"), ("Lyon", "Auvergne-Rhone-Alpes", "FR"),
    ("Amsterdam", "North Holland", "NL"), ("Rotterdam", "South Holland", "NL"),
    ("New York", "New York", "US"), ("San Francisco", "California", "US"),
    ("Austin", "Texas", "US"), ("Boston", "Massachusetts", "US"), ("Chicago", "Illinois", "US"),
    ("Seattle", "Washington", "US"), ("Denver", "Colorado", "US"), ("Miami", "Florida", "US"),
    ("Toronto", "Ontario", "CA"), ("Vancouver", "British Columbia", "CA"),
    ("Tokyo", "Tokyo", "JP"), ("Osaka", "Osaka", "JP"), ("Singapore", "Singapore", "SG"),
    ("Sydney", "New South Wales", "AU"), ("Melbourne", "Victoria", "AU"),
    ("Stockholm", "Stockholm", "SE"), ("Oslo", "Oslo", "NO"), ("Copenhagen", "Capital Region", "DK"),
    ("Milan", "Lombardy", "IT"), ("Madrid", "Community of Madrid", "ES"),
    ("Dublin", "Leinster", "IE"), ("Vienna", "Vienna", "AT"), ("Tel Aviv", "Tel Aviv", "IL"),
    ("Bangalore", "Karnataka", "IN"), ("Sao Paulo", "Sao Paulo", "BR"),
]

VERBS = ["provides", "develops", "operates", "designs", "distributes", "specializes in"]
OBJECTS = ["software", "services", "products", "a platform", "technology",
           "financial services", "healthcare products", "online services"]
AUDIENCES = ["customers", "businesses", "consumers", "clients", "hospitals",
             "retailers", "utilities", "governments"]
EXTRAS = ["with a global network of partners", "and helps businesses grow",
          "as a leading provider in its market", "through an online platform",
          "for customers in Europe and Asia", "with offices in several countries",
          "and designs products for households", "as a manufacturer of components"]


def description_vocabulary():
    words = set()
    for group in (VERBS, OBJECTS, AUDIENCES, EXTRAS, SECTORS):
        for phrase in group:
            words.update(w.lower() for w in phrase.split())
    for city, region, country in CITIES:
        words.update(w.lower() for w in (city + " " + region).replace("-", " ").split())
        words.add(country.lower())
    return words


def coined_words(rng, count, banned):
    seen = set()
    out = []
    while len(out) < count:
        word = "".join(rng.choice(ONSETS) + rng.choice(VOWELS) + rng.choice(CODAS)
                       for _ in range(rng.choice([1, 2, 2, 2])))
        word += rng.choice(ENDINGS)
        if len(word) < 4 or len(word) > 11 or word in seen or word in banned:
            continue
        seen.add(word)
        out.append(word)
    return out


def accent(rng, word):
    positions = [i for i, c in enumerate(word) if c in ACCENTED]
    if not positions:
        return word
    i = rng.choice(positions)
    return word[:i] + ACCENTED[word[i]] + word[i + 1:]


def make_rows(count, seed):
    rng = random.Random(seed)
    banned = description_vocabulary() | {"co", "corp", "inc", "ltd", "plc", "the"}
    pool = iter(coined_words(rng, count * 3, banned))
    rows = []
    for _ in range(count):
        first = next(pool)
        if rng.random() < 0.03:
            first = accent(rng, first)
        first = first.capitalize()
        form = rng.random()
        sector = rng.choice(SECTORS)
        if form < 0.50:
            name = f"{first} {sector}"
        elif form < 0.65:
            name = f"{first} {next(pool).capitalize()}"
        elif form < 0.80:
            name = first
        elif form < 0.90:
            name = f"{first} & {next(pool).capitalize()} {sector}"
        else:
            name = f"{first} {sector}, Inc."
        city, region, country = rng.choice(CITIES)
        row = {"name": name, "city": city, "region": region, "country_code": country,
               "description": ""}
        if rng.random() < 0.1:
            row["region"] = ""
        if rng.random() < 0.45:
            row["description"] = (f"{rng.choice(VERBS).capitalize()} {rng.choice(OBJECTS)} "
                                  f"for {rng.choice(AUDIENCES)}, {rng.choice(EXTRAS)}.")
        rows.append(row)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=20260101)
    parser.add_argument("out")
    args = parser.parse_args()
    rows = make_rows(args.rows, args.seed)
    with open(args.out, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=["name", "city", "region", "country_code",
                                               "description"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


if __name__ == "__main__":
    main()
