"""Regenerate raw100.jsonl: one hundred raw crisis tweets for the
annotation round-trip check. Texts are hand-written; this script only
cycles decorations and formats JSONL."""

import json
from pathlib import Path

TEXTS = [
    "Tribhuvan international airport closed after 7.9 Earthquake in Kathmandu",
    "#China media says buildings toppled in #Tibet http://t.co/O7VSYWTGsk",
    "India sent 4 Ton relief material, Team of doctors to Nepal",
    "Historic Dharahara tower toppled in central Kathmandu",
    "Phone lines damaged across Gorkha district, operators confirm",
    "Main road to Pokhara blocked by landslide",
    "Ancient temples collapsed in Bhaktapur square",
    "Water supply restored to Lalitpur hospital after two days",
    "48 tourists stranded on Everest base camp",
    "12 climbers trapped by avalanche near Everest",
    "Families stuck under rubble in Sindhupalchok, rescuers dig overnight",
    "Embassy database tracking missing persons opened online",
    "Rescue teams located survivors in collapsed school",
    "Army deployed 4 ton relief material to Nepal",
    "Emergency declared in Kathmandu valley, curfew imposed",
    "5000 tents distributed at Tundikhel ground",
    "Field hospital equipped with water purifiers near airport",
    "Transport aircraft deployed with medical supplies",
    "Flights to Kathmandu were cancelled today, airport officials say",
    "Power lines cut, communication down in many villages",
    "Doctors treated victims at Bir hospital through the night",
    "Volunteers distributed blankets and food at the camp",
    "Roads cracked near the river, drivers warned",
    "Rescue helicopters searching the valley for survivors",
    "Death toll rising, hospitals overwhelmed",
    "Aftershock hit the city again this morning",
    "School buildings damaged, classes suspended",
    "Bridge over the Trishuli river collapsed",
    "Red Cross opened a helpline for stranded tourists",
    "Government declared three days of mourning",
    "Praying for everyone in Nepal tonight",
    "My thoughts are with the families of the victims",
    "Stay strong Nepal, we stand with you",
    "Cannot believe the footage from Kathmandu, heartbreaking",
    "Donate to the relief fund if you can, every bit helps",
    "So grateful all our friends are safe",
    "Watching the news in disbelief... terrible tragedy",
    "Hope the rescue teams reach the villages soon",
    "",
    "!!! ... !!!",
]

DECORATIONS = [
    lambda t, i: t,
    lambda t, i: f"RT @user{i}: {t}",
    lambda t, i: f"{t} #NepalQuake",
    lambda t, i: f"{t} http://t.co/x{i}",
    lambda t, i: f"BREAKING: {t}",
]

CLASSES = ["infrastructure", "missing", "shelter"]


def main():
    here = Path(__file__).parent
    records = []
    i = 0
    while len(records) < 100:
        base = TEXTS[i % len(TEXTS)]
        deco = DECORATIONS[(i // len(TEXTS)) % len(DECORATIONS)]
        text = deco(base, i) if base else base
        records.append(
            {
                "id": f"raw-{i:03d}",
                "ts": 1429920000 + i * 137,
                "class": CLASSES[i % len(CLASSES)],
                "conf": round(0.80 + (i % 20) * 0.01, 2),
                "text": text,
            }
        )
        i += 1
    with open(here / "raw100.jsonl", "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
    print(f"wrote {len(records)} raw records")


if __name__ == "__main__":
    main()
