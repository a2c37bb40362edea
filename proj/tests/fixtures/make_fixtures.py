#!/usr/bin/env python3
"""Regenerates the larger test fixtures in this directory.

Small hand-written fixtures (minimal.qxa, yes_no.qxa, mergeable.tsv, ...)
are kept as-is; run this only when the generated ones need to change.
"""

import os

HERE = os.path.dirname(os.path.abspath(__file__))

# About fifty keywords in the style of the DOCTOR script; "none" stands for
# the rule applied when a sentence contains no keyword.
ELIZA_KEYWORDS = """
sorry remember if dreamt dreams dream perhaps name deutsch francais
italiano espanol xforeign hello computer am are your was i
you yes no my can what because why everyone everybody
nobody noone always alike like different same certainly how when
think feel believe wish mother father sister brother child none
""".split()
assert len(ELIZA_KEYWORDS) == 50

CONTROL_STATES = 18


def write(name, text):
    with open(os.path.join(HERE, name), "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def eliza():
    # State 0 reads the keyword (the question), 100+i holds keyword i until
    # the separator, which emits the keyword's reply. States 1..18 form the
    # control loop that consumes the sentence.
    lines = [
        "# Keyword machine in the shape of ELIZA: 50 keywords with 2 rules each",
        "# (100 keyword rules) plus an 18-state control loop (18 rules).",
        "initial 0",
        "accept " + " ".join(str(s) for s in range(1, CONTROL_STATES + 1)),
    ]
    for i, kw in enumerate(ELIZA_KEYWORDS):
        lines.append(f"rule 0 {kw} - {100 + i}")
        lines.append(f"rule {100 + i} ## reply_{kw} 1")
    for s in range(1, CONTROL_STATES + 1):
        nxt = s + 1 if s < CONTROL_STATES else s
        lines.append(f"rule {s} word - {nxt}")
    write("eliza.qxa", "\n".join(lines) + "\n")

    rows = ["# One entry per keyword; sentence lengths cycle through the control loop."]
    for i, kw in enumerate(ELIZA_KEYWORDS):
        length = i % (CONTROL_STATES + 7) + 1
        rows.append(f"{kw}\t{' '.join(['word'] * length)}\treply_{kw}")
    write("eliza_table.tsv", "\n".join(rows) + "\n")


def what50():
    lines = ["# what-machine over 50 tokens, all definitions distinct", "initial 1", "accept 2"]
    for i in range(1, 51):
        lines.append(f"rule 1 u{i:02d} def_u{i:02d} 2")
    write("what50.qxa", "\n".join(lines) + "\n")


def meetings():
    rows = ["# 24 sentences about meetings, two yes/no questions each"]
    flipped = ["# meetings.tsv with the answer of one entry flipped"]
    first = True
    for kind in ["lunch", "meeting"]:
        for time in ["2", "5", "8"]:
            for day in ["monday", "tuesday"]:
                for room in ["room_a", "room_b"]:
                    s = f"{kind} at {time} on {day} in {room}"
                    a5 = "yes" if time == "5" else "no"
                    am = "yes" if day == "monday" else "no"
                    rows.append(f"is_it_at_5\t{s}\t{a5}")
                    rows.append(f"is_it_on_monday\t{s}\t{am}")
                    flipped.append(f"is_it_at_5\t{s}\t{('no' if a5 == 'yes' else 'yes') if first else a5}")
                    flipped.append(f"is_it_on_monday\t{s}\t{am}")
                    first = False
    write("meetings.tsv", "\n".join(rows) + "\n")
    write("meetings_flipped.tsv", "\n".join(flipped) + "\n")


def help_graph():
    # 200 items askable at the start; each answer mentions 14 fresh items.
    # Answers about those mention only their siblings and their parent, so
    # nothing new appears after the first round.
    edges = ["# 200 initial items, 14 fresh links each; depth-1 items link back only"]
    for i in range(200):
        for j in range(14):
            edges.append(f"h{i:03d}\tt{i:03d}_{j:02d}")
    for i in range(200):
        for j in range(14):
            edges.append(f"t{i:03d}_{j:02d}\tt{i:03d}_{(j + 1) % 14:02d}")
            edges.append(f"t{i:03d}_{j:02d}\th{i:03d}")
    write("help_graph.tsv", "\n".join(edges) + "\n")
    write("help_init.txt", "\n".join(f"h{i:03d}" for i in range(200)) + "\n")


def zipf_corpus():
    # Word r occurs round(1000 / r) times, r = 1..100, interleaved round-robin.
    counts = [int(1000 / r + 0.5) for r in range(1, 101)]
    remaining = list(counts)
    words = []
    while any(remaining):
        for r, left in enumerate(remaining):
            if left:
                words.append(f"w{r + 1:03d}")
                remaining[r] -= 1
    lines = [" ".join(words[i:i + 20]) for i in range(0, len(words), 20)]
    write("zipf_corpus.txt", "\n".join(lines) + "\n")


if __name__ == "__main__":
    eliza()
    what50()
    meetings()
    help_graph()
    zipf_corpus()
