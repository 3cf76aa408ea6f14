#!/usr/bin/env python3
"""Run the corpus benchmark and write the CSV/SVG report.

Generates the nine-sentence synthetic voice corpus (10 trials each),
measures every algorithm on every trial, prints the per-sentence mean
sizes, and leaves results.csv, summary.csv and six charts in ./report.
"""

from collections import defaultdict
from pathlib import Path

from voicepack.bench import CorpusSpec, SENTENCE_IDS, emit_report, generate_corpus, run_benchmark
from voicepack.codecs import AlgorithmId

corpus = generate_corpus(CorpusSpec(seed=42))
print(f"corpus: {len(corpus)} items (9 sentences x 10 trials)")

records = run_benchmark(corpus)
print(f"measured {len(records)} (sentence, trial, algorithm) records\n")

means = defaultdict(dict)
for r in records:
    means[r.sentence_id].setdefault(r.algorithm, []).append(r.compressed_chars)
print(f"{'':>4}" + "".join(f"{a.label:>9}" for a in AlgorithmId))
for sid in SENTENCE_IDS:
    row = [sum(v) / len(v) for v in (means[sid][a] for a in AlgorithmId)]
    print(f"{sid:>4}" + "".join(f"{v:>9.0f}" for v in row))

winners = [min(means[sid], key=lambda a: sum(means[sid][a]) / len(means[sid][a]))
           for sid in SENTENCE_IDS]
print(f"\nsmallest mean size per sentence: "
      f"{', '.join(w.label for w in winners)}")

out = Path(__file__).resolve().parent / "report"
for path in emit_report(records, out):
    print(f"wrote {path}")
