"""Heuristic clause-local dependency arcs.

Not a parser: a deterministic sketch good enough to connect event verbs
with their participant nouns. Tokens split into clauses at punctuation and
coordinating conjunctions; within a clause every main verb receives its
nearest unclaimed noun to the left (nsubj) and the head of the following
noun group (dobj, or obl when a preposition intervenes). Auxiliaries
attach to their verb, noun-group modifiers to the group head, and
consecutive verbs in a clause get a ccomp link, so attribution verbs
("media says buildings toppled") never capture the inner clause's noun.
"""

from __future__ import annotations

AUX_FORMS = {"is", "are", "was", "were", "am", "be", "been", "being",
             "has", "have", "had", "having", "do", "does", "did"}

BE_FORMS = {"is", "are", "was", "were", "am", "be", "been", "being"}

CLAUSE_BREAK_TAGS = {".", ",", ":", "``", "''", "(", ")", "CC"}


def _is_verb(tag: str) -> bool:
    return tag.startswith("VB")


def _is_noun(tag: str) -> bool:
    return tag.startswith("NN")


def _clauses(tags: list[str]) -> list[list[int]]:
    clauses, current = [], []
    for i, t in enumerate(tags):
        if t in CLAUSE_BREAK_TAGS:
            if current:
                clauses.append(current)
            current = []
        else:
            current.append(i)
    if current:
        clauses.append(current)
    return clauses


def _noun_groups(clause: list[int], tags: list[str]) -> list[list[int]]:
    groups, current = [], []
    for i in clause:
        if _is_noun(tags[i]) or tags[i] == "CD":
            current.append(i)
        else:
            if current:
                groups.append(current)
            current = []
    if current:
        groups.append(current)
    return groups


def sketch_deps(tokens: list[str], tags: list[str]) -> list[dict]:
    """Edges as {"head", "dep", "label"} dicts, 0-based token indices."""
    edges: list[tuple[int, int, str]] = []

    for clause in _clauses(tags):
        verbs = [i for i in clause if _is_verb(tags[i])]
        main_verbs = [
            i for i in verbs
            if tokens[i].lower() not in AUX_FORMS
        ]
        # auxiliaries attach to the nearest main verb to their right
        for i in verbs:
            if tokens[i].lower() in AUX_FORMS:
                following = [v for v in main_verbs if v > i]
                if following:
                    passive = tags[following[0]] == "VBN" and tokens[i].lower() in BE_FORMS
                    edges.append((following[0], i, "auxpass" if passive else "aux"))

        groups = _noun_groups(clause, tags)
        # modifiers inside a noun group hang off its head (the last noun)
        for group in groups:
            nouns = [i for i in group if _is_noun(tags[i])]
            if not nouns:
                continue
            head = nouns[-1]
            for i in group:
                if i != head:
                    edges.append((head, i, "nummod" if tags[i] == "CD" else "compound"))

        def group_head(group):
            nouns = [i for i in group if _is_noun(tags[i])]
            return nouns[-1] if nouns else None

        def prepositional(group) -> bool:
            return group[0] > clause[0] and tags[group[0] - 1] in ("IN", "TO")

        # subjects first, claiming their groups, so an attribution verb
        # cannot later grab the embedded clause's subject as its object
        claimed_groups: list[int] = []
        for pos, v in enumerate(main_verbs):
            left = [
                gi for gi, g in enumerate(groups)
                if g[-1] < v and (pos == 0 or g[0] > main_verbs[pos - 1])
            ]
            if not left:
                continue
            plain = [gi for gi in left if not prepositional(groups[gi])]
            pick = (plain or left)[-1]
            subj = group_head(groups[pick])
            if subj is not None and pick not in claimed_groups:
                edges.append((v, subj, "nsubj"))
                claimed_groups.append(pick)

        for pos, v in enumerate(main_verbs):
            right = [
                gi for gi, g in enumerate(groups)
                if g[0] > v
                and gi not in claimed_groups
                and (pos + 1 >= len(main_verbs) or g[-1] < main_verbs[pos + 1])
            ]
            if not right:
                continue
            first = groups[right[0]]
            obj = group_head(first)
            if obj is not None:
                gap = range(v + 1, first[0])
                label = "obl" if any(tags[i] in ("IN", "TO") for i in gap) else "dobj"
                edges.append((v, obj, label))
            for gi in right[1:2]:
                extra = groups[gi]
                head = group_head(extra)
                gap = range(first[-1] + 1, extra[0])
                if head is not None and any(tags[i] in ("IN", "TO") for i in gap):
                    edges.append((v, head, "obl"))

        for a, b in zip(main_verbs, main_verbs[1:]):
            edges.append((a, b, "ccomp"))

    seen = set()
    out = []
    for head, dep, label in edges:
        if head == dep or (head, dep) in seen:
            continue
        seen.add((head, dep))
        out.append({"head": head, "dep": dep, "label": label})
    return out
