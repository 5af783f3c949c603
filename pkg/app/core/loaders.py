"""Input files of the ordlab command: JSON documents and CSV tables"""
import csv
import json
import logging
from pathlib import Path
from typing import Any, List, Tuple

import numpy as np

from core.exceptions import MissingInput, OrdlabError, ParseError
from core import serializers
from dist_core.dist import Dist, ScoreVector, from_rows, new_dist
from fluct_lab.chains import MarkovChainSpec
from fluct_lab.energies import EnergyFamily, energy_family_from_chain
from poset_lab.preorder import FinitePreorder, from_relation
from poset_lab.representations import RealFamily

logger = logging.getLogger(__name__)


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except FileNotFoundError:
        raise MissingInput(f"no such file: {path}")
    except OSError as error:
        raise MissingInput(f"{path}: {error.strerror}")


def read_json(path) -> Any:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as error:
        raise ParseError(error.msg, f"{path}:{error.lineno}")


def read_csv_rows(path) -> List[Tuple[int, List[str]]]:
    """Non-empty rows with their line numbers; '#' starts a comment line"""
    rows = []
    reader = csv.reader(_read(path).splitlines())
    for row in reader:
        cells = [cell.strip() for cell in row]
        if not any(cells) or cells[0].startswith("#"):
            continue
        rows.append((reader.line_num, cells))
    return rows


def load_dist(path) -> Dist:
    data = serializers.validated(serializers.DistSerializer,
                                 {"probs": read_json(path)}, str(path))
    return new_dist(data["probs"])


def load_dists_csv(path) -> List[Dist]:
    """One distribution per row"""
    parsed = []
    for line, cells in read_csv_rows(path):
        data = serializers.validated(serializers.DistSerializer,
                                     {"probs": cells}, f"{path}:{line}")
        parsed.append(data["probs"])
    return from_rows(parsed)


def load_dists(path) -> List[Dist]:
    """A JSON file holds one distribution, a CSV file one per row"""
    if str(path).endswith(".csv"):
        return load_dists_csv(path)
    return [load_dist(path)]


def load_scores(path) -> ScoreVector:
    data = serializers.validated(serializers.ScoreSerializer,
                                 {"values": read_json(path)}, str(path))
    return ScoreVector.of(data["values"])


def load_poset(path) -> FinitePreorder:
    """{"n": 3, "pairs": [[0, 2], [1, 2]], "labels": ["a", "b", "t"]}"""
    data = serializers.validated(serializers.PosetSerializer,
                                 read_json(path), str(path))
    return from_relation(data["n"], data["pairs"], data.get("labels"))


def load_family(path) -> RealFamily:
    """A JSON array of functions, each an array of values"""
    data = serializers.validated(serializers.FamilySerializer,
                                 {"funcs": read_json(path)}, str(path))
    return RealFamily(tuple(tuple(f) for f in data["funcs"]))


def load_relations(path) -> List[np.ndarray]:
    """A JSON array of n x n relation matrices"""
    data = serializers.validated(serializers.RelationsSerializer,
                                 {"relations": read_json(path)}, str(path))
    return [np.array(matrix, dtype=bool).reshape(len(matrix), len(matrix))
            for matrix in data["relations"]]


def _chain_data(path) -> dict:
    return serializers.validated(serializers.ChainSerializer,
                                 read_json(path), str(path))


def load_chain_spec(path) -> MarkovChainSpec:
    """The chain alone, reducible matrices included"""
    return _chain_data(path)["spec"]


def load_chain(path) -> Tuple[MarkovChainSpec, EnergyFamily]:
    """Chain with its energies; without them the energies are read off the
    chain's own distributions at the given beta"""
    data = _chain_data(path)
    spec = data["spec"]
    if "E" in data:
        return spec, data["E"]
    logger.debug("energies of %s taken from the chain at beta %s",
                 path, data["beta"])
    return spec, energy_family_from_chain(spec, data["beta"])


def load_samples(path) -> np.ndarray:
    """One real per line"""
    values = []
    for line, cells in read_csv_rows(path):
        if len(cells) != 1:
            raise ParseError(f"expected one value, got {len(cells)}",
                             f"{path}:{line}")
        try:
            values.append(float(cells[0]))
        except ValueError:
            raise ParseError(f"{cells[0]!r} is not a number", f"{path}:{line}")
    return np.array(values, dtype=float)


LOADERS = {
    "dist": load_dist,
    "dists": load_dists,
    "scores": load_scores,
    "poset": load_poset,
    "family": load_family,
    "relations": load_relations,
    "chain": load_chain,
    "samples": load_samples,
}


def load_inputs(paths, schema: str) -> List[Any]:
    """Every path read with the loader of one schema"""
    if schema not in LOADERS:
        raise OrdlabError(f"unknown input schema {schema!r}")
    return [LOADERS[schema](path) for path in paths]
