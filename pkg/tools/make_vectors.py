"""Regenerate the bundled mini word-vector file.

Vectors are synthetic but deterministic: every word is its topic-group
prototype plus seeded per-word noise, so words sharing a topic sit close
(cosine ~0.75-0.85) and words from different topics sit near zero.  That
gives the semantic scorer a stable, offline-testable signal without
shipping a trained model.

Usage: python tools/make_vectors.py
"""

from __future__ import annotations

import pathlib

import numpy as np

DIMENSION = 50
NOISE = 0.55
SEED = 20240811

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "perfquant" / "data" / "mini_vectors.txt"

GROUPS: dict[str, str] = {
    "function": """the a an of to for with by per on upon into it its this that
        these those is are was were been being there here such only also
        and or while when where which who whose what all each any some""",
    "modal": "shall should must will can may would could might be able need",
    "comparative": """in under within more less than least most up beyond above
        below over exceed exceeding exceeds faster slower longer shorter
        near away around at from exactly limit hard maximum minimum cap
        every once number threshold between range ideally""",
    "negation": "no not never neither nor without cannot none nothing",
    "time": """time seconds second minutes minute hours hour ms milliseconds
        millisecond latency delay response respond react duration downtime
        timeout uptime overnight yearly daily weekly boot startup shutdown
        recovery instantly deadline""",
    "capacity": """users user requests request transactions transaction sessions
        session connections connection throughput capacity concurrent
        simultaneous load handling handle handles supporting support
        supports sustain hold serving messages events samples records
        gb mb kb bandwidth percent times rates rate volume items""",
    "quality": """fast quick slow acceptable reasonable possible immediately
        efficiently valuable increasingly preferred stable stability
        responsive smooth reliable available availability""",
    "system": """system product platform server application software interface
        device gateway service cluster pipeline database cache scheduler
        controller modem sensor sensors logger firmware archive network
        bus relay node nodes worker processes process website page search
        query queries report reports backup index memory disk cpu storage
        file files data telemetry heartbeat packet batch job jobs
        calibration checkout module component email dashboard""",
    "action": """take return returns generate generates run runs dispatch draw
        send sent switch retain refresh synchronize register let store
        deliver perform operate consume observe keep kept stay complete
        completes finish react deploy deployed install operational plugged
        respond rendered render load loads boot execute""",
    "subject": """customers customer operations operation existing new peak
        sustained arrival gains usage loss results readings uploads design
        ensure active million power energy watts temperature size""",
}


def main() -> None:
    rng = np.random.default_rng(SEED)
    seen: dict[str, np.ndarray] = {}
    for group, words in GROUPS.items():
        prototype = rng.normal(size=DIMENSION)
        prototype /= np.linalg.norm(prototype)
        for word in words.split():
            noise = rng.normal(size=DIMENSION)
            noise /= np.linalg.norm(noise)
            if word in seen:
                # a word stays with its first group; still draw the noise so
                # later vectors do not shift when duplicates are edited out
                continue
            vec = prototype + NOISE * noise
            vec /= np.linalg.norm(vec)
            seen[word] = vec

    lines = [f"{len(seen)} {DIMENSION}"]
    for word, vec in seen.items():
        lines.append(word + " " + " ".join(f"{x:.6f}" for x in vec))
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(seen)} vectors of dimension {DIMENSION} to {OUT}")


if __name__ == "__main__":
    main()
