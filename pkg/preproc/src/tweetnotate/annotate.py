"""Convert raw tweet JSONL into the summarizer's annotated schema.

Input, one record per line:  {"id", "ts", "class", "conf", "text"}
Output adds "tokens" (surface/lemma/pos), "deps", and optionally "events".
The converter is an offline batch step; the summarization engine only ever
sees its files, never this code.
"""

from __future__ import annotations

import json
import logging

from .deps import AUX_FORMS, sketch_deps
from .tag import tag
from .tokenize import lemmatize, tokenize

logger = logging.getLogger(__name__)

LIGHT_VERBS = {"be", "have", "do", "say", "get"}


class RawRecordError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def _check_raw(obj, line_no: int) -> None:
    if not isinstance(obj, dict):
        raise RawRecordError(line_no, "record is not a JSON object")
    for key in ("id", "ts", "class", "conf", "text"):
        if key not in obj:
            raise RawRecordError(line_no, f"missing field {key!r}")
    if not isinstance(obj["ts"], int) or isinstance(obj["ts"], bool):
        raise RawRecordError(line_no, "ts must be an integer")
    conf = obj["conf"]
    if not isinstance(conf, (int, float)) or isinstance(conf, bool) or not 0 <= conf <= 1:
        raise RawRecordError(line_no, "conf must be a number in [0, 1]")
    if not isinstance(obj["text"], str):
        raise RawRecordError(line_no, "text must be a string")


def detect_event_indices(tokens: list[str], tags: list[str]) -> list[int]:
    """Main-verb event marks: finite verbs outside the light/aux stoplist."""
    events = []
    for i, (tok, pos) in enumerate(zip(tokens, tags)):
        if not pos.startswith("VB") or pos == "VBG":
            continue
        lemma = lemmatize(tok)
        if tok.lower() in AUX_FORMS or lemma in LIGHT_VERBS:
            continue
        events.append(i)
    return events


def annotate_record(obj: dict, mark_events: bool = False) -> dict:
    surfaces = tokenize(obj["text"])
    tags = tag(surfaces)
    if surfaces:
        deps = sketch_deps(surfaces, tags)
    else:
        deps = []
        if obj["text"].strip():
            logger.warning("tweet %s: text produced no tokens", obj.get("id"))
    record = {
        "id": str(obj["id"]),
        "ts": obj["ts"],
        "class": str(obj["class"]).strip().lower(),
        "conf": float(obj["conf"]),
        "text": obj["text"],
        "tokens": [
            {"surface": s, "lemma": lemmatize(s), "pos": p}
            for s, p in zip(surfaces, tags)
        ],
        "deps": deps,
    }
    if mark_events:
        record["events"] = detect_event_indices(surfaces, tags)
    return record


def annotate_stream(lines, mark_events: bool = False, error_sink=None):
    """Yield annotated records for each valid raw JSONL line."""
    for line_no, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            err = RawRecordError(line_no, f"invalid JSON ({e.msg})")
            logger.warning("%s", err)
            if error_sink is not None:
                error_sink.append(err)
            continue
        try:
            _check_raw(obj, line_no)
        except RawRecordError as err:
            logger.warning("%s", err)
            if error_sink is not None:
                error_sink.append(err)
            continue
        yield annotate_record(obj, mark_events)


def annotate_file(in_path, out_path, mark_events: bool = False, error_sink=None) -> int:
    count = 0
    with open(in_path, encoding="utf-8") as src, open(out_path, "w", encoding="utf-8") as dst:
        for record in annotate_stream(src, mark_events, error_sink):
            dst.write(json.dumps(record, ensure_ascii=False, separators=(",", ":")) + "\n")
            count += 1
    return count
