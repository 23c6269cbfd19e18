#!/usr/bin/env python3
"""Regenerates the bundled fixtures under data/.

Run from anywhere: python3 data/scripts/make_fixtures.py
Output is deterministic; re-running produces byte-identical files.
"""

import csv
import datetime as dt
import io
import json
import pathlib

from albania_articles import ARTICLES
from training_sentences import BUILDING, INFRASTRUCTURE, OTHER, RESILIENCE

DATA = pathlib.Path(__file__).resolve().parent.parent
LABELS = {"B": "building", "I": "infrastructure", "R": "resilience", "O": "other"}


def epoch_ms(text):
    stamp = dt.datetime.strptime(text, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=dt.timezone.utc)
    return int(stamp.timestamp() * 1000)


def iso(ms):
    return dt.datetime.fromtimestamp(ms / 1000, tz=dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def write_csv(path, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(buf.getvalue(), encoding="utf-8")


def write_json(path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


ALBANIA_T0 = epoch_ms("2019-11-26T02:54:12Z")
YAAN_T0 = epoch_ms("2013-04-20T00:02:47Z")


def training_set():
    rows = []
    groups = [(BUILDING, "building"), (INFRASTRUCTURE, "infrastructure"),
              (RESILIENCE, "resilience"), (OTHER, "other")]
    # interleave classes so file order is not sorted by label
    longest = max(len(g) for g, _ in groups)
    for i in range(longest):
        for sentences, label in groups:
            if i < len(sentences):
                rows.append((sentences[i], label))
    write_csv(DATA / "training" / "briefing_sentences.csv", ("text", "label"), rows)


def keywords():
    write_json(DATA / "training" / "keywords.json", {
        "building": ["building", "buildings", "collapsed", "house", "houses", "masonry",
                     "walls", "concrete", "apartment", "cracks", "storey", "dwellings"],
        "infrastructure": ["bridge", "bridges", "road", "roads", "highway", "power", "pipeline",
                           "port", "airport", "railway", "electricity", "gas", "substations"],
        "resilience": ["displaced", "shelter", "shelters", "emergency", "rescue", "tents", "aid",
                       "recovery", "relief", "homeless", "volunteers", "reconstruction"],
    })


def feed():
    def feature(fid, mag, alert, when, place, lon, lat, depth):
        return {
            "type": "Feature",
            "id": fid,
            "properties": {"mag": mag, "place": place, "time": when, "alert": alert,
                           "type": "earthquake", "title": f"M {mag} - {place}"},
            "geometry": {"type": "Point", "coordinates": [lon, lat, depth]},
        }

    features = [
        feature("albania2019", 6.4, "red", ALBANIA_T0, "15 km WSW of Mamurras, Albania",
                19.5223, 41.5135, 20.0),
        feature("yaan2013", 6.6, "orange", YAAN_T0, "Lushan, Ya'an, Sichuan, China",
                102.888, 30.308, 14.0),
        feature("us70006d0m", 5.2, "green", epoch_ms("2019-11-27T07:23:41Z"),
                "Crete, Greece", 23.2712, 35.7218, 66.0),
        feature("nc73292360", 4.6, None, epoch_ms("2019-11-25T18:10:02Z"),
                "10km NW of The Geysers, CA", -122.84, 38.83, 2.1),
        feature("us60006a6i", 4.9, "yellow", epoch_ms("2019-11-24T12:01:55Z"),
                "Vanuatu region", 168.02, -15.75, -0.5),
    ]
    write_json(DATA / "fixtures" / "usgs_feed.geojson", {
        "type": "FeatureCollection",
        "metadata": {"generated": ALBANIA_T0 + 3600_000, "title": "fixture feed", "count": len(features)},
        "features": features,
    })


def albania():
    labels = []
    for number, article in enumerate(ARTICLES):
        sentences = [text for _, text in article["sentences"]]
        # three paragraphs per article
        cut = len(sentences) // 3
        paragraphs = [sentences[:cut], sentences[cut:2 * cut], sentences[2 * cut:]]
        body = "\n\n".join(" ".join(p) for p in paragraphs)
        published = ALBANIA_T0 + article["offset_hours"] * 3600_000
        write_json(DATA / "fixtures" / "albania2019" / "news" / f"{number:02d}-{article['slug']}.json", {
            "url": f"https://news.example.org/albania/{article['slug']}",
            "published_at": iso(published),
            "language": "en",
            "title": article["title"],
            "body": body,
        })
        labels.extend((text, LABELS[tag]) for tag, text in article["sentences"])
    write_csv(DATA / "evaluation" / "albania2019_labels.csv", ("text", "label"), labels)


# post-event daily counts per factor (day 0 = event day); pre-event baseline for 3 days
YAAN_SERIES = {
    "schools": [40, 120, 90, 60, 30, 12, 10, 8, 9, 7, 6, 8, 7, 6, 5],
    "roads": [80, 100, 70, 40, 14, 10, 9, 8, 6, 7, 5, 6, 5, 4, 5],
    "houses": [150, 90, 50, 20, 15, 12, 10, 9, 8, 7, 8, 6, 6, 5, 5],
    "offices": [30, 60, 50, 35, 8, 7, 6, 5, 6, 4, 5, 4, 5, 4, 3],
    "collapse": [200, 110, 60, 35, 25, 20, 15, 12, 10, 9, 8, 7, 6, 6, 5],
}
YAAN_BASELINE = {"schools": [5, 4, 6], "roads": [6, 5, 4], "houses": [4, 5, 3],
                 "offices": [3, 4, 2], "collapse": [1, 0, 1]}
YAAN_TEMPLATES = {
    "schools": ["Schools in Lushan are still closed, students stay with their parents #Yaan",
                "No classes again today, the school gym is full of donated supplies",
                "Teachers are checking the classrooms before the students come back to school"],
    "roads": ["The road to Baoxing is blocked by landslides, please take care",
              "Traffic jam on the highway to Ya'an, rescue trucks moving slowly",
              "Roads into Lushan reopened for relief vehicles this afternoon"],
    "houses": ["Our house has big cracks, we are sleeping in a tent tonight",
               "Many houses in the village are damaged, families have nowhere to go",
               "Went back to check my home, the walls are leaning"],
    "offices": ["The office is closed until engineers inspect the building",
                "Back at work today but half of the offices are still empty",
                "Our company told everyone to stay away from the office this week"],
    "collapse": ["Saw a collapsed temple near Longmen, so sad",
                 "Pictures of the collapse in Longmen village are heartbreaking",
                 "Rescuers searching the collapsed market hall all night"],
}
FILLER = ["Praying for everyone in Sichuan tonight",
          "Donated blood at the city hospital, long queue but worth it",
          "The weather in Chengdu is cloudy with light rain"]


def yaan():
    by_day = {}
    for factor in YAAN_SERIES:
        days = [(-3 + i, c) for i, c in enumerate(YAAN_BASELINE[factor])]
        days += list(enumerate(YAAN_SERIES[factor]))
        templates = YAAN_TEMPLATES[factor]
        for day, count in days:
            for k in range(count):
                # spread posts over the day, strictly inside [day, day + 1) relative to t0
                offset = day * 86400_000 + 60_000 + (k * 86000_000) // max(count, 1)
                text = templates[k % len(templates)]
                by_day.setdefault(day, []).append((YAAN_T0 + offset, factor, k, text))
    for day in sorted(by_day):
        posts = []
        for n in range(3):
            ms = YAAN_T0 + day * 86400_000 + 3_600_000 * (n + 1)
            by_day[day].append((ms, "filler", n, FILLER[n]))
        for ms, factor, k, text in sorted(by_day[day]):
            posts.append({
                "url": None,
                "published_at": iso(ms),
                "language": "en",
                "title": None,
                "body": text,
            })
        name = f"day{day:+03d}.json".replace("+", "p").replace("-", "m")
        write_json(DATA / "fixtures" / "yaan2013" / "social" / name, posts)

    survey_rows = []
    answers = {
        "tag": [("yes", 10, "days"), ("no", "", ""), ("no", "", ""), ("yes", 2, "weeks"), ("no", "", ""), ("no", "", "")],
        "power": [("yes", 48, "hours"), ("yes", 3, "days"), ("yes", 1, "days"), ("no", "", ""), ("yes", 72, "hours"), ("yes", 2, "days")],
        "utilities": [("yes", 2, "days"), ("no", "", ""), ("yes", 4, "days"), ("yes", 1, "weeks"), ("no", "", ""), ("yes", 24, "hours")],
        "office": [("yes", 1, "weeks"), ("yes", 3, "days"), ("no", "", ""), ("yes", 5, "days"), ("yes", 4, "days"), ("no", "", "")],
        "school": [("yes", 1, "weeks"), ("yes", 2, "weeks"), ("yes", 5, "days"), ("no", "", ""), ("yes", 6, "days"), ("yes", 1, "weeks")],
        "commute": [("yes", 3, "days"), ("yes", 5, "days"), ("no", "", ""), ("yes", 2, "days"), ("no", "", ""), ("yes", 4, "days")],
        "telecom": [("yes", 12, "hours"), ("yes", 1, "days"), ("yes", 6, "hours"), ("no", "", ""), ("yes", 18, "hours"), ("no", "", "")],
    }
    for aspect, rows in answers.items():
        for affected, duration, unit in rows:
            survey_rows.append((aspect, affected, duration, unit))
    write_csv(DATA / "fixtures" / "yaan2013" / "survey.csv", ("aspect", "affected", "duration", "unit"), survey_rows)


if __name__ == "__main__":
    training_set()
    keywords()
    feed()
    albania()
    yaan()
