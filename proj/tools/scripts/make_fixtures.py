#!/usr/bin/env python3
# Copyright 2026 The Affordex Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the synthetic evaluation fixtures under fixtures/.

Usage: make_fixtures.py <repo_root>

The fixtures are synthetic stand-ins for recorded Jericho and TextWorld
walkthroughs. They are built so that running the pipeline over them with
their bundled snapshots reproduces the reference per-game counts in
tests/data/jericho_results.csv and the totals in
tests/data/textworld_results.csv:

  * every object noun has a fixed set of ReceivesAction edges, so each noun
    contributes a known number of "verb noun" commands wherever it appears;
  * step object sets are searched until the command totals per game match;
  * admissible commands contain exactly the chosen number of generated
    commands (and "take" commands for the take run) plus decoys.

The one Jericho step with real text is the "Backstage" scene of ztuu, whose
snapshot answers are reconstructed to yield its eleven published commands.

Everything is seeded, so the output is identical on every run. Expected
counts are written next to the traces, and label files for the annotation
workflow are written under fixtures/labels/.
"""

import csv
import json
import os
import random
import sys

OBJECT_NOUNS = """
    lamp rope shield helmet axe dagger coin key chest map scroll book candle
    torch bottle flask potion ring amulet crown gem jewel diamond ruby
    emerald pearl statue idol altar throne table chair bench bed desk
    cabinet cupboard shelf drawer mirror painting portrait tapestry carpet
    rug window door gate wall fence ladder stair staircase bridge boat raft
    oar anchor barrel crate sack bag basket bucket pail jar jug cup mug
    plate bowl spoon fork knife kettle pot stove oven fireplace chimney
    hearth log stick branch leaf tree bush flower rose grass stone rock
    boulder pebble sand mud puddle pond lake river stream fountain bell horn
    trumpet drum flute harp violin piano clock watch compass telescope lens
    magnifier pencil pen paper letter envelope note card ticket coupon
    newspaper magazine leaflet brochure poster sign plaque banner flag pole
    mast sail wheel lever button switch knob handle lock chain padlock hook
    nail hammer screwdriver wrench saw shovel spade pickaxe wire cable pipe
    hose valve pump engine machine computer keyboard monitor screen radio
    television telephone camera battery bulb fuse robot skeleton skull bone
    coffin tomb grave crypt urn vase pitcher teapot goblet chalice trophy
    medal badge uniform coat cloak robe hat cap boot shoe sandal sock scarf
    belt wallet purse umbrella cane wand staff orb crystal prism feather egg
    nest apple banana orange lemon carrot potato onion garlic pepper tomato
    cucumber lettuce cabbage mushroom bread cheese butter milk cake pie
    cookie sandwich sausage ham bacon chicken fish steak soup salad rice
    pasta flour sugar salt honey jam juice wine beer coffee tea water ice
    snow cloud sun moon star planet rocket spaceship hatch console panel
    terminal laser blaster
""".split()

PLACE_NOUNS = """
    tent hut cabin shed barn stable tower castle dungeon cellar attic
    kitchen pantry library study bedroom bathroom hallway corridor lobby
    foyer garden courtyard orchard forest clearing meadow field beach cave
    cavern tunnel shaft pit chasm cliff ledge summit valley swamp marsh
    desert oasis jungle temple shrine chapel church cathedral tavern inn
    shop market bank office factory warehouse station platform harbor dock
    pier lighthouse museum theater arena circus
""".split()

# Participles with their base form; the knowledge tails of ReceivesAction.
RA_VERBS = [
    ("opened", "open"), ("closed", "close"), ("pushed", "push"),
    ("pulled", "pull"), ("moved", "move"), ("touched", "touch"),
    ("kicked", "kick"), ("broken", "break"), ("thrown", "throw"),
    ("shaken", "shake"), ("smelled", "smell"), ("turned", "turn"),
    ("washed", "wash"), ("cleaned", "clean"), ("searched", "search"),
    ("read", "read"), ("lit", "light"), ("burned", "burn"),
    ("painted", "paint"), ("climbed", "climb"), ("raised", "raise"),
    ("lowered", "lower"), ("sold", "sell"), ("bought", "buy"),
    ("hidden", "hide"), ("bent", "bend"), ("folded", "fold"),
    ("tied", "tie"), ("rolled", "roll"), ("polished", "polish"),
    ("repaired", "repair"), ("watched", "watch"), ("stolen", "steal"),
    ("weighed", "weigh"), ("counted", "count"), ("wrapped", "wrap"),
    ("shared", "share"), ("rubbed", "rub"), ("squeezed", "squeeze"),
    ("lifted", "lift"), ("pressed", "press"), ("stored", "store"),
    ("carried", "carry"), ("filled", "fill"), ("emptied", "empty"),
]
FOOD_VERBS = [
    ("eaten", "eat"), ("cooked", "cook"), ("sliced", "slice"),
    ("chopped", "chop"), ("fried", "fry"), ("roasted", "roast"),
    ("grilled", "grill"), ("tasted", "taste"), ("washed", "wash"),
    ("bitten", "bite"),
]
CONTAINER_VERBS = [
    ("opened", "open"), ("closed", "close"), ("locked", "lock"),
    ("unlocked", "unlock"), ("emptied", "empty"), ("filled", "fill"),
    ("searched", "search"), ("moved", "move"),
]
# Tails that are not verb phrases; the pipeline reports and skips them.
NON_VERBAL = ["heavy", "sharp", "old", "useful", "expensive", "small"]
# UsedFor tails naming nouns that never occur in a fixture step, so they
# never yield a two-object command.
USED_FOR_NOISE = [
    "decoration", "keeping things", "holding liquids", "making music",
    "having fun", "entertaining people", "storing food",
]
MAX_DEGREE = 12
WEIGHTS = [1.0, 1.0, 1.0, 2.0, 1.5, 0.5, 3.0]
BUILT_AT = "2026-10-14T00:00:00Z"
DIRECTIONS = ["north", "south", "east", "west", "up", "down", "northeast",
              "southwest"]
DECOY_VERBS = ["examine", "drop", "go", "look at", "enter"]

RELATION_ORDER = {"UsedFor": 0, "ReceivesAction": 1, "CapableOf": 2}

BACKSTAGE_DESCRIPTION = (
    "Backstage\n"
    "Ah ah choo. Those curtains. If I weren t so busy helping you with this "
    "game, I d suggest you go on without me and let me clean this place up "
    "enough so that when you returned, I could at least describe it "
    "decently. I ll do the best I can though. A thick maroon curtain "
    "separates the backstage area from the stage. This area was obviously "
    "the target of a small underground tornado, a Vorx as scrims scenery "
    "and costumes litter the floor. Even an old steamer trunk, virtually "
    "decaying from age, rests in a corner.")
BACKSTAGE_INVENTORY = (
    "Your inventory: brass lantern, glasses, ZM$100000,  Multi-Implementeers,"
    "  Forever Gores,  Baby Rune, razor-like gloves, cheaply-made sword")
# Heads the bundled tagger finds in the scene.
BACKSTAGE_HEADS = [
    "age", "area", "backstage", "best", "corner", "costumes", "curtain",
    "curtains", "floor", "game", "glasses", "gloves", "gores", "inventory",
    "lantern", "place", "razor", "rests", "rune", "scenery", "stage",
    "sword", "target", "tornado", "trunk",
]
BACKSTAGE_EXTRA_TERMS = ["costume", "glove", "gore", "rest"]
# (term, relation, tail, weight)
BACKSTAGE_EDGES = [
    ("area", "ReceivesAction", "lived in", 1.0),
    ("floor", "ReceivesAction", "covered", 1.0),
    ("floor", "ReceivesAction", "found", 1.0),
    ("floor", "ReceivesAction", "lain on", 1.0),
    ("game", "ReceivesAction", "played", 2.0),
    ("game", "UsedFor", "having fun", 1.0),
    ("glasses", "ReceivesAction", "filled", 1.0),
    ("glasses", "ReceivesAction", "needed", 1.0),
    ("glasses", "ReceivesAction", "worn", 1.0),
    ("glasses", "UsedFor", "seeing", 1.0),
    ("gloves", "ReceivesAction", "found", 1.0),
    ("lantern", "ReceivesAction", "used", 1.0),
    ("lantern", "UsedFor", "seeing in the dark", 1.0),
    ("stage", "UsedFor", "performing plays", 1.0),
    ("sword", "UsedFor", "fighting", 1.0),
    ("sword", "ReceivesAction", "sharp", 1.0),
    ("tornado", "CapableOf", "destroying houses", 1.0),
    ("trunk", "ReceivesAction", "found", 1.0),
    ("trunk", "ReceivesAction", "heavy", 1.0),
]
BACKSTAGE_COMMANDS = [
    "live area", "cover floor", "find floor", "lie floor", "play game",
    "fill glasses", "need glasses", "wear glasses", "find gloves",
    "use lantern", "find trunk",
]
BACKSTAGE_LABELS = {
    "use lantern": "A", "wear glasses": "A",
    "cover floor": "B", "fill glasses": "B", "find floor": "B",
    "find gloves": "B", "find trunk": "B", "play game": "B",
    "lie floor": "C", "live area": "C", "need glasses": "C",
}

# TextWorld vocabulary.
TW_FOODS = [
    "apple", "banana", "carrot", "potato", "onion", "tomato", "cucumber",
    "lettuce", "pepper", "mushroom", "bread", "cheese", "chicken", "fish",
    "steak", "sausage", "pie", "cake", "cookie", "sandwich", "egg", "lemon",
    "orange", "cabbage", "garlic", "ham", "bacon", "butter", "honey", "jam",
]
TW_CONTAINERS = [
    "fridge", "cabinet", "cupboard", "drawer", "chest", "door", "gate",
    "oven", "box", "crate", "basket", "jar", "barrel", "trunk", "toolbox",
]
TW_THINGS = [
    "table", "chair", "counter", "shelf", "stove", "bed", "sofa", "lamp",
    "key", "book", "map", "coin", "candle", "rope", "hammer", "shovel",
    "bowl", "plate", "cup", "spoon", "fork", "pan", "pot", "kettle",
    "mirror", "rug", "clock", "vase", "painting", "bench",
]
TW_KNIFE_TAILS = [
    ("slicing apple", "apple"), ("slicing bread", "bread"),
    ("slicing cheese", "cheese"), ("slicing tomato", "tomato"),
    ("chopping carrot", "carrot"), ("chopping onion", "onion"),
    ("chopping potato", "potato"), ("slicing cucumber", "cucumber"),
    ("slicing lemon", "lemon"), ("chopping mushroom", "mushroom"),
]
TW_KNIFE_VERB = {"slicing": "slice", "chopping": "chop"}
TW_ADJECTIVES = [
    "red", "green", "yellow", "old", "wooden", "rusty", "shiny", "small",
    "large", "fresh", "rotten", "iron", "golden", "dusty", "plain",
]
TW_ROOMS = [
    "kitchen", "pantry", "cellar", "garden", "bedroom", "bathroom",
    "hallway", "attic", "shed", "backyard", "corridor", "study", "lobby",
    "workshop", "garage", "porch", "lounge", "library", "office", "basement",
]
# First scenes whose commands were labeled by hand: game -> commands.
TW_FIRST_SCENES = {
    329: 11, 108: 5, 140: 8, 32: 7, 62: 3, 157: 3, 155: 12, 55: 5, 160: 4,
    171: 4,
}


def article(noun):
    return ("an " if noun[0] in "aeiou" else "a ") + noun


def enumerate_list(phrases):
    if len(phrases) == 1:
        return phrases[0]
    return ", ".join(phrases[:-1]) + " and " + phrases[-1]


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def write_lines(path, lines):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(line + "\n")


def step_record(game, index, location, description, inventory, objects,
                acs, walkthrough, source):
    return dumps({
        "game_id": game,
        "step_index": index,
        "location_id": location,
        "description": description,
        "inventory": inventory,
        "object_list": objects,
        "admissible_commands": acs,
        "walkthrough_command": walkthrough,
        "source": source,
    })


def snapshot_lines(terms, edges):
    """edges: list of (term, relation, tail, weight) in API order."""
    manifest = {
        "format": "affordex-snapshot",
        "version": 1,
        "built_at": BUILT_AT,
        "api_base": "fixture",
        "page_limit": 1000,
        "max_pages": 5,
        "language": "en",
        "relations": ["UsedFor", "ReceivesAction", "CapableOf"],
        "terms": sorted(set(terms)),
        "failed_terms": [],
    }
    lines = [dumps({"manifest": manifest})]
    keyed = sorted(enumerate(edges),
                   key=lambda ie: (ie[1][0], RELATION_ORDER[ie[1][1]], ie[0]))
    for _, (term, relation, tail, weight) in keyed:
        lines.append(dumps({"subject": term, "relation": relation,
                            "tail": tail, "weight": weight}))
    return lines


class Lexicon:
    """Knowledge edges of synthetic nouns and the commands they yield."""

    def __init__(self, rng):
        self.rng = rng
        self.edges = []
        self.commands = {}  # noun -> generated commands (ReceivesAction)

    def add_noun(self, noun, degree, verbs):
        chosen = self.rng.sample(verbs, degree)
        chosen.sort(key=lambda v: v[1])
        for participle, _ in chosen:
            self.edges.append((noun, "ReceivesAction", participle,
                               self.rng.choice(WEIGHTS)))
        if self.rng.random() < 0.3:
            self.edges.append((noun, "ReceivesAction",
                               self.rng.choice(NON_VERBAL), 1.0))
        if self.rng.random() < 0.3:
            self.edges.append((noun, "UsedFor",
                               self.rng.choice(USED_FOR_NOISE), 1.0))
        self.commands[noun] = [f"{base} {noun}" for _, base in chosen]

    def degree(self, noun):
        return len(self.commands.get(noun, []))


def split_evenly(rng, total, parts, minimum, maximum):
    if parts == 0:
        return []
    values = [minimum] * parts
    rest = total - minimum * parts
    assert rest >= 0 and total <= maximum * parts, (total, parts)
    while rest > 0:
        i = rng.randrange(parts)
        if values[i] < maximum:
            values[i] += 1
            rest -= 1
    return values


# Jericho ---------------------------------------------------------------------


def read_reference(path):
    rows = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.startswith("#") or not line.strip():
                continue
            p = line.strip().split(",")
            rows.append({"game": p[0], "steps": int(p[1]),
                         "base_generated": int(p[2]),
                         "base_matched": int(p[3]),
                         "take_generated": int(p[5]),
                         "take_matched": int(p[6])})
    return rows


def adjust_steps(rng, steps, target, count, candidates_for, locked=()):
    """Swaps nouns in `steps` (lists of nouns, slot 0 fixed) until
    sum(count(step)) == target."""
    total = sum(count(s) for s in steps)
    movable = [i for i, s in enumerate(steps) if i not in locked and len(s) > 1]
    guard = 0
    while total != target:
        guard += 1
        assert guard < 2000000, "fixture search did not converge"
        i = rng.choice(movable)
        step = steps[i]
        slot = rng.randrange(1, len(step))
        replacement = rng.choice(candidates_for(i, slot))
        if replacement in step:
            continue
        before = count(step)
        old = step[slot]
        step[slot] = replacement
        after = count(step)
        if abs(total - before + after - target) < abs(total - target):
            total += after - before
        else:
            step[slot] = old
    return steps


def make_jericho(root, rng):
    reference = read_reference(os.path.join(root, "tests/data/jericho_results.csv"))
    reference = [r for r in reference if r["game"] != "Overall"]

    lexicon = Lexicon(rng)
    by_degree = {k: [] for k in range(MAX_DEGREE + 1)}
    for noun in OBJECT_NOUNS:
        d = rng.randrange(MAX_DEGREE + 1)
        lexicon.add_noun(noun, d, RA_VERBS)
        by_degree[d].append(noun)
    for noun in PLACE_NOUNS:
        lexicon.add_noun(noun, rng.randrange(4), RA_VERBS)
    for edge in BACKSTAGE_EDGES:
        lexicon.edges.append(edge)
    lexicon.commands["__backstage__"] = list(BACKSTAGE_COMMANDS)

    terms = set(OBJECT_NOUNS) | set(PLACE_NOUNS) | set(BACKSTAGE_HEADS)
    terms |= set(BACKSTAGE_EXTRA_TERMS)
    expected_base, expected_take = [], []
    labels = {}
    for row in reference:
        game = row["game"]
        S = row["steps"]
        G = row["base_generated"]
        M = row["base_matched"]
        dM = row["take_matched"] - row["base_matched"]
        T = row["take_generated"] - row["base_generated"]
        if T < S:
            # The reference take run reports fewer commands than the base
            # run for this game; additions cannot be negative, so the
            # fixture adds two objects per step instead.
            T = 2 * S
        backstage = game == "ztuu"
        first = 1 if backstage else 0
        sizes = split_evenly(rng, T - (len(BACKSTAGE_HEADS) if backstage else 0),
                             S - first, 1, 10)
        steps = []
        for n in sizes:
            title = rng.choice(PLACE_NOUNS)
            others = rng.sample(OBJECT_NOUNS, n - 1)
            steps.append([title] + others)

        def count(step):
            return sum(lexicon.degree(n) for n in step)

        target = G - (len(BACKSTAGE_COMMANDS) if backstage else 0)
        adjust_steps(rng, steps, target, count,
                     lambda i, slot: OBJECT_NOUNS)

        # Generated commands per evaluation step, in pipeline order.
        scenes = []
        if backstage:
            scenes.append({"backstage": True, "objects": BACKSTAGE_HEADS,
                           "commands": list(BACKSTAGE_COMMANDS)})
        for step in steps:
            commands = []
            for noun in sorted(step):
                commands.extend(sorted(lexicon.commands[noun],
                                       key=lambda c: c.split()[0]))
            scenes.append({"backstage": False, "objects": step,
                           "commands": commands})

        all_commands = [(i, c) for i, s in enumerate(scenes)
                        for c in s["commands"]]
        matched = rng.sample(all_commands, M)
        all_objects = [(i, o) for i, s in enumerate(scenes)
                       for o in s["objects"]]
        taken = rng.sample(all_objects, dM)
        for scene in scenes:
            scene["acs"] = []
        for i, c in matched:
            words = c.split()
            if rng.random() < 0.3:
                c = f"{words[0]} the {words[1]}"
            scenes[i]["acs"].append(c)
        for i, o in taken:
            scenes[i]["acs"].append(f"take {o}" if rng.random() < 0.7
                                    else f"take the {o}")

        records = []
        raw = []
        for i, scene in enumerate(scenes):
            raw.append((i, scene))
        # Revisits of earlier rooms, removed again by location dedup.
        revisits = 0 if backstage else max(1 if game == "zork1" else 0, S // 5)
        for _ in range(revisits):
            pos = rng.randrange(1, len(raw) + 1)
            earlier = [r for r in raw[:pos]]
            if not earlier:
                continue
            raw.insert(pos, (rng.choice(earlier)[0], None))
        for index, (scene_id, scene) in enumerate(raw):
            revisit = scene is None
            scene = scenes[scene_id]
            if not revisit:
                scene["step_index"] = index
            location = f"loc_{scene_id:03d}" if not scene["backstage"] else "backstage"
            if scene["backstage"]:
                description, inventory = BACKSTAGE_DESCRIPTION, BACKSTAGE_INVENTORY
            else:
                title, others = scene["objects"][0], list(scene["objects"][1:])
                carried = []
                if len(others) >= 2 and rng.random() < 0.4:
                    carried = [others.pop()]
                if others:
                    body = ("You can see " +
                            enumerate_list([article(o) for o in others]) +
                            " here.")
                else:
                    body = "There is nothing here."
                description = f"{title.capitalize()}\n{body}"
                inventory = ("You are carrying " + article(carried[0]) + "."
                             if carried else "")
                if revisit:
                    # Revisits show the room again, without the carried item.
                    inventory = ""
            acs = list(scene["acs"]) if not revisit else []
            objs = [o for o in scene["objects"] if o not in BACKSTAGE_HEADS]
            acs += rng.sample(DIRECTIONS, 2) + ["look", "inventory"]
            if objs:
                acs.append(f"examine {rng.choice(objs)}")
                acs.append(f"drop {rng.choice(objs)}")
            acs = list(dict.fromkeys(acs))
            rng.shuffle(acs)
            walk = rng.choice(DIRECTIONS) if index + 1 < len(raw) else None
            records.append(step_record(game, index, location, description,
                                       inventory, None, acs, walk, "jericho"))
        write_lines(os.path.join(root, f"fixtures/jericho/traces/{game}.jsonl"),
                    records)
        expected_base.append((game, S, G, M))
        expected_take.append((game, S, G + T, M + dM))
        labels[game] = scenes

    write_lines(os.path.join(root, "fixtures/jericho/snapshot.jsonl"),
                snapshot_lines(terms, lexicon.edges))
    for name, rows in (("expected_base.csv", expected_base),
                       ("expected_take.csv", expected_take)):
        lines = ["game,steps,generated,matched"]
        lines += [",".join(map(str, r)) for r in rows]
        totals = [sum(r[k] for r in rows) for k in (1, 2, 3)]
        lines.append("Overall," + ",".join(map(str, totals)))
        write_lines(os.path.join(root, "fixtures/jericho", name), lines)
    return labels


def write_jericho_labels(root, rng, scenes_by_game):
    """Labels of the base commands of three games with hand-labeled counts."""
    wanted = {}
    with open(os.path.join(root, "tests/data/human_baseline.csv")) as f:
        for line in f:
            if line.startswith("jericho,"):
                _, game, a, b, c, _ = line.strip().split(",")
                wanted[game] = {"A": int(a), "B": int(b), "C": int(c)}
    for game, want in wanted.items():
        rows = []
        pending = []
        for scene in scenes_by_game[game]:
            step = scene["step_index"]
            for command in scene["commands"]:
                if scene["backstage"]:
                    category = BACKSTAGE_LABELS[command]
                    want[category] -= 1
                    rows.append((step, command, category))
                else:
                    pending.append((step, command))
        pool = [c for c in "ABC" for _ in range(want[c])]
        assert len(pool) == len(pending), (game, len(pool), len(pending))
        rng.shuffle(pool)
        rows += [(s, c, k) for (s, c), k in zip(pending, pool)]
        rows.sort(key=lambda r: r[0])
        lines = ["game,step,command,category"]
        lines += [f"{game},{s},{c},{k}" for s, c, k in rows]
        write_lines(os.path.join(root, f"fixtures/labels/{game}.csv"), lines)


# TextWorld -------------------------------------------------------------------


def make_textworld(root, rng):
    lexicon = Lexicon(rng)
    food_degree = {}
    for noun in TW_FOODS:
        lexicon.add_noun(noun, rng.randrange(1, 4), FOOD_VERBS)
    for noun in TW_CONTAINERS:
        lexicon.add_noun(noun, rng.randrange(1, 5), CONTAINER_VERBS)
    for noun in TW_THINGS:
        lexicon.add_noun(noun, rng.randrange(0, 3), RA_VERBS)
    lexicon.edges.append(("knife", "ReceivesAction", "sharp", 1.0))
    for tail, _ in TW_KNIFE_TAILS:
        lexicon.edges.append(("knife", "UsedFor", tail, 1.0))
    vocabulary = TW_FOODS + TW_CONTAINERS + TW_THINGS + ["knife"]

    def commands(step):
        out = []
        for noun in sorted(set(step)):
            if noun == "knife":
                uses = []
                for tail, other in TW_KNIFE_TAILS:
                    if other in step:
                        verb = TW_KNIFE_VERB[tail.split()[0]]
                        uses.append((verb, f"{verb} {other} with knife"))
                out.extend(c for _, c in sorted(uses))
            else:
                out.extend(sorted(lexicon.commands[noun],
                                  key=lambda c: c.split()[0]))
        return out

    with open(os.path.join(root, "tests/data/textworld_results.csv")) as f:
        rows = [l.strip().split(",") for l in f if not l.startswith("#")]
    base = next(r for r in rows if r[0] == "base")
    take = next(r for r in rows if r[0] == "take")
    S, G, M = int(base[1]), int(base[2]), int(base[3])
    T = int(take[2]) - G
    dM = int(take[3]) - M

    games = list(range(1, 334))
    step_counts = {g: 3 for g in games}
    for g in rng.sample([g for g in games if g not in TW_FIRST_SCENES],
                        3 * len(games) - S):
        step_counts[g] = 2
    layout = [(g, k) for g in games for k in range(step_counts[g])]
    sizes = split_evenly(rng, T, len(layout), 1, 6)
    # Hand-labeled first scenes need enough objects to reach their counts.
    first_indices = [i for i, (g, k) in enumerate(layout)
                     if k == 0 and g in TW_FIRST_SCENES]
    for i in first_indices:
        j = max(range(len(sizes)), key=lambda j: (j not in first_indices,
                                                  sizes[j]))
        if sizes[i] < 4 and sizes[j] > sizes[i]:
            sizes[i], sizes[j] = sizes[j], sizes[i]
    steps = []
    for n in sizes:
        steps.append(rng.sample(vocabulary, n))
    locked = set()
    first_targets = {}
    for i, (g, k) in enumerate(layout):
        if k == 0 and g in TW_FIRST_SCENES:
            first_targets[i] = TW_FIRST_SCENES[g]

    def count(step):
        return len(commands(step))

    # Fix the hand-labeled first scenes, then the overall total.
    for i, target in first_targets.items():
        if len(steps[i]) < 3:
            continue
        adjust_steps(rng, [steps[i]], target, count, lambda _i, _s: vocabulary)
        locked.add(i)
    for i, target in first_targets.items():
        assert count(steps[i]) == target or i not in locked
    # Scenes too small to reach their target get more objects.
    for i, target in first_targets.items():
        if i in locked:
            continue
        raise SystemExit(f"first scene {layout[i]} has too few objects")

    def full_count(all_steps):
        return sum(count(s) for s in all_steps)

    total = full_count(steps)
    movable = [i for i in range(len(steps)) if i not in locked and len(steps[i]) > 1]
    guard = 0
    while total != G:
        guard += 1
        assert guard < 2000000
        i = rng.choice(movable)
        step = steps[i]
        slot = rng.randrange(len(step))
        replacement = rng.choice(vocabulary)
        if replacement in step:
            continue
        before = count(step)
        old = step[slot]
        step[slot] = replacement
        after = count(step)
        if abs(total - before + after - G) < abs(total - G):
            total += after - before
        else:
            step[slot] = old

    scene_commands = [commands(s) for s in steps]
    # At most three matches per scene.
    matched = set()
    candidates = [(i, c) for i, cs in enumerate(scene_commands) for c in cs]
    rng.shuffle(candidates)
    per_scene = {}
    for i, c in candidates:
        if len(matched) == M:
            break
        if per_scene.get(i, 0) >= 3:
            continue
        matched.add((i, c))
        per_scene[i] = per_scene.get(i, 0) + 1
    assert len(matched) == M
    take_candidates = [(i, o) for i, s in enumerate(steps) for o in set(s)]
    taken = rng.sample(sorted(take_candidates), dM)

    acs = [[] for _ in steps]
    for i, c in sorted(matched):
        acs[i].append(c)
    for i, o in taken:
        acs[i].append(f"take {o}")

    by_game = {}
    for i, (g, k) in enumerate(layout):
        by_game.setdefault(g, []).append(i)
    expected = []
    for g in games:
        game = f"game_{g}"
        records = []
        rooms = rng.sample(TW_ROOMS, len(by_game[g]))
        sequence = [(n, i) for n, i in enumerate(by_game[g])]
        if rng.random() < 0.1:
            # Walking back through a room already described.
            sequence.insert(len(sequence), sequence[0])
        for index, (n, i) in enumerate(sequence):
            step = steps[i]
            room = rooms[n]
            phrases = []
            for noun in step:
                if rng.random() < 0.5:
                    phrases.append(f"{rng.choice(TW_ADJECTIVES)} {noun}")
                else:
                    phrases.append(noun)
                if rng.random() < 0.05:
                    phrases.append(f"{rng.choice(TW_ADJECTIVES)} {noun}")
            phrases = list(dict.fromkeys(phrases))
            carried = phrases[-1:] if len(phrases) > 2 and rng.random() < 0.5 else []
            visible = phrases[:len(phrases) - len(carried)]
            description = (f"-= {room.capitalize()} =-\n"
                           f"You are in a {room}. You see " +
                           enumerate_list([article(p) for p in visible]) + ".")
            inventory = ("You are carrying: " + article(carried[0])
                         if carried else "You are carrying nothing.")
            step_acs = list(acs[i])
            step_acs += rng.sample(["go north", "go south", "go east",
                                    "go west"], 2) + ["look", "inventory"]
            step_acs.append(f"examine {rng.choice(step)}")
            step_acs.append(f"put {rng.choice(step)} on table")
            step_acs = list(dict.fromkeys(step_acs))
            rng.shuffle(step_acs)
            walk = rng.choice(["go north", "go south", "go east", "go west"])
            if index + 1 == len(sequence):
                walk = None
            records.append(step_record(game, index, room, description,
                                       inventory, phrases, step_acs, walk,
                                       "textworld"))
        write_lines(os.path.join(root, f"fixtures/textworld/traces/{game}.jsonl"),
                    records)
        base_g = sum(len(scene_commands[i]) for i in by_game[g])
        base_m = sum(1 for i, _ in matched if i in by_game[g])
        take_g = base_g + sum(len(set(steps[i])) for i in by_game[g])
        take_m = base_m + sum(1 for i, _ in taken if i in by_game[g])
        expected.append((game, len(by_game[g]), base_g, base_m, take_g, take_m))

    terms = set(vocabulary)
    write_lines(os.path.join(root, "fixtures/textworld/snapshot.jsonl"),
                snapshot_lines(terms, lexicon.edges))
    for name, cols in (("expected_base.csv", (2, 3)),
                       ("expected_take.csv", (4, 5))):
        lines = ["game,steps,generated,matched"]
        lines += [f"{r[0]},{r[1]},{r[cols[0]]},{r[cols[1]]}" for r in expected]
        lines.append("Overall,{},{},{}".format(
            sum(r[1] for r in expected), sum(r[cols[0]] for r in expected),
            sum(r[cols[1]] for r in expected)))
        write_lines(os.path.join(root, "fixtures/textworld", name), lines)

    # Labels for the hand-labeled first scenes.
    wanted = {}
    with open(os.path.join(root, "tests/data/human_baseline.csv")) as f:
        for line in f:
            if line.startswith("textworld,game_"):
                _, game, a, b, c, _ = line.strip().split(",")
                wanted[int(game.split("_")[1])] = (int(a), int(b), int(c))
    lines = ["game,step,command,category"]
    for g, (a, b, c) in wanted.items():
        i = by_game[g][0]
        pool = ["A"] * a + ["B"] * b + ["C"] * c
        assert len(pool) == len(scene_commands[i]), g
        rng.shuffle(pool)
        for command, category in zip(scene_commands[i], pool):
            lines.append(f"game_{g},0,{command},{category}")
    write_lines(os.path.join(root, "fixtures/labels/textworld_first_scenes.csv"),
                lines)


def main():
    root = sys.argv[1]
    rng = random.Random(20261014)
    scenes = make_jericho(root, rng)
    write_jericho_labels(root, rng, scenes)
    make_textworld(root, rng)


if __name__ == "__main__":
    main()
