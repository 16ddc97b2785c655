#!/usr/bin/env python3
"""Regenerate the bundled fixtures in data/.

Produces:
  data/mini-corpus.jsonl   12 crawl records over 4 topics (2 German)
  data/toy-checkpoint.npz  a small trained relation model
  data/train-config.json   the config the toy checkpoint was trained with

Everything is seeded, so rerunning the script reproduces identical files.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from storyweave.checkpoint import save_model  # noqa: E402
from storyweave.classifier import TrainConfig, train  # noqa: E402
from storyweave.datasets import generate_synthetic  # noqa: E402
from storyweave.encoder import EncoderConfig  # noqa: E402

DOCS = [
    # -- harbor lighthouses (4 English documents) --------------------------
    {
        "url": "https://example.org/wiki/stormwick-lighthouse",
        "title": "Stormwick Lighthouse",
        "text": (
            "The Stormwick lighthouse was built on the granite headland in 1874. "
            "Its keeper trimmed the oil lamp every night because the harbor "
            "entrance was narrow and dangerous. Ships waited outside. "
            "After the lamp was electrified in 1936, the keeper's cottage became "
            "a small museum about the harbor and its pilots. "
            "Dr. Alden wrote the first guide to the lighthouse optics."
        ),
        "query_term": "harbor lighthouses",
        "language": "en",
    },
    {
        "url": "https://example.org/wiki/penmarrow-light",
        "title": "Penmarrow Light",
        "text": (
            "Penmarrow Light guards the western harbor wall and its shifting "
            "sandbar. The keeper kept a logbook of every ship that entered the "
            "harbor at night. Fog was common. "
            "Although the lamp was small, its beam reached the outer anchorage "
            "because the tower stood on high cliffs. "
            "The lighthouse was automated in 1972 and the last keeper retired."
        ),
        "query_term": "harbor lighthouses",
        "language": "en",
    },
    {
        "url": "https://example.org/wiki/gullholm-beacon",
        "title": "Gullholm Beacon",
        "text": (
            "The Gullholm beacon is the oldest lighthouse on the northern coast. "
            "Local fishermen funded the first wooden tower because the harbor "
            "channel froze each winter and the lamp marked open water. "
            "When the stone tower replaced it, the keeper planted a garden "
            "below the cliffs. Storms destroyed it twice."
        ),
        "query_term": "harbor lighthouses",
        "language": "en",
    },
    {
        "url": "https://example.org/wiki/lighthouse-keepers-strike",
        "title": "The keepers' strike of 1901",
        "text": (
            "In 1901 the lighthouse keepers of the southern harbor district "
            "refused to light the lamps for three nights. "
            "The strike ended after the harbor board doubled the oil allowance "
            "and paid for a second keeper at every offshore light. "
            "Newspapers called it the quietest strike in history."
        ),
        "query_term": "harbor lighthouses",
        "language": "en",
    },
    # -- urban beekeeping (3 English documents) ----------------------------
    {
        "url": "https://example.org/wiki/rooftop-hives",
        "title": "Rooftop hives",
        "text": (
            "Rooftop beekeeping spread through the city after 2010. "
            "Bees from rooftop hives forage in parks and along railway "
            "embankments, and the honey often tastes of linden blossom. "
            "While a rural hive may starve in late summer, urban bees find "
            "flowers in every season. City honey sells quickly."
        ),
        "query_term": "urban beekeeping",
        "language": "en",
    },
    {
        "url": "https://example.org/wiki/beekeeping-ordinance",
        "title": "Beekeeping ordinance",
        "text": (
            "The city council passed a beekeeping ordinance in 2014. "
            "Each rooftop apiary must register its hives and keep a water "
            "source, because bees otherwise crowd the neighbours' balconies. "
            "Inspectors visit every registered apiary once a year. "
            "Fines are rare."
        ),
        "query_term": "urban beekeeping",
        "language": "en",
    },
    {
        "url": "https://example.org/wiki/honey-flow-survey",
        "title": "Honey flow survey",
        "text": (
            "A volunteer survey weighed urban hives every week for two years. "
            "Hives near the botanical garden gained the most weight, and "
            "rooftop hives above the market district produced the darkest "
            "honey. The survey concluded that forage, not traffic, decides "
            "how much honey a city hive can make."
        ),
        "query_term": "urban beekeeping",
        "language": "en",
    },
    # -- mountain railways (2 English + 1 tagged German) -------------------
    {
        "url": "https://example.org/wiki/kestrel-pass-railway",
        "title": "Kestrel Pass railway",
        "text": (
            "The Kestrel Pass railway climbs from the valley station to the "
            "summit in forty minutes. The rack railway was cut into the "
            "mountain between 1896 and 1899. "
            "Because the gradient exceeds one in four, every carriage carries "
            "its own brake wheel. Snow closes the line each November."
        ),
        "query_term": "mountain railways",
        "language": "en",
    },
    {
        "url": "https://example.org/wiki/funicular-of-brantholm",
        "title": "Funicular of Brantholm",
        "text": (
            "The Brantholm funicular is the steepest mountain railway in the "
            "region. Two counterbalanced carriages share a single track with "
            "a passing loop at the middle station. "
            "When the lower reservoir was drained in 1967, the railway "
            "switched from water ballast to an electric winch. "
            "It still carries milk down from the alp every morning."
        ),
        "query_term": "mountain railways",
        "language": "en",
    },
    {
        "url": "https://example.org/wiki/zahnradbahn-silberhorn",
        "title": "Zahnradbahn am Silberhorn",
        "text": (
            "Die Zahnradbahn am Silberhorn wurde im Jahr 1892 eröffnet und "
            "ist die älteste Bergbahn des Tales. "
            "Im Winter ruht der Betrieb, weil der Schnee die Strecke bedeckt. "
            "Die Fahrt zum Gipfel dauert eine halbe Stunde, und die Aussicht "
            "auf das Tal ist berühmt."
        ),
        "query_term": "mountain railways",
        "language": "de",
    },
    # -- river ferries (1 English + 1 untagged German) ---------------------
    {
        "url": "https://example.org/wiki/alder-crossing-ferry",
        "title": "Alder Crossing ferry",
        "text": (
            "A chain ferry has crossed the river at Alder Crossing since 1830. "
            "The ferry carries two wagons or one lorry, and the crossing "
            "takes four minutes. When the river floods, the chain is lowered "
            "to the riverbed and the ferry waits on the eastern bank."
        ),
        "query_term": "river ferries",
        "language": "en",
    },
    {
        "url": "https://example.org/wiki/faehre-grauwerder",
        "title": "Fähre Grauwerder",
        "text": (
            "Die kleine Fähre von Grauwerder verbindet das Dorf mit der Insel "
            "im Fluss. Sie fährt seit mehr als hundert Jahren und wird von "
            "einer Familie betrieben. Im Herbst, wenn das Wasser niedrig ist, "
            "bleibt die Fähre oft am Ufer, und die Kinder müssen über die "
            "alte Brücke zur Schule gehen."
        ),
        "query_term": "river ferries",
        "language": "",
    },
]


def write_corpus(path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for doc in DOCS:
            fh.write(json.dumps(doc, ensure_ascii=False, sort_keys=True) + "\n")
    print(f"wrote {len(DOCS)} records -> {path}")


TOY_ENCODER = dict(
    vocab_size=300,
    num_layers=1,
    hidden_dim=16,
    num_heads=2,
    max_seq_len=24,
    dropout=0.1,
    seed=1,
)
TOY_TRAIN = dict(
    batch_size=16,
    dropout=0.1,
    learning_rate=1e-3,
    epochs=10,
    seed=1,
)


def write_checkpoint(path: Path, config_path: Path) -> None:
    data = generate_synthetic(150, seed=11)
    model, trace = train(data, EncoderConfig(**TOY_ENCODER), TrainConfig(**TOY_TRAIN))
    save_model(model, path)
    config_path.write_text(
        json.dumps({"encoder": TOY_ENCODER, "train": TOY_TRAIN}, indent=2) + "\n",
        encoding="utf-8",
    )
    print(f"trained toy model (final loss {trace[-1]:.4f}) -> {path}")


def main() -> None:
    data_dir = ROOT / "data"
    data_dir.mkdir(exist_ok=True)
    write_corpus(data_dir / "mini-corpus.jsonl")
    write_checkpoint(data_dir / "toy-checkpoint.npz", data_dir / "train-config.json")


if __name__ == "__main__":
    main()
