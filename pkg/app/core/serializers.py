"""Validation of input files, reported as ParseError with the field path"""
from typing import Any, Iterator, Tuple

from rest_framework import serializers
from rest_framework.settings import api_settings

from core.exceptions import OrdlabError, ParseError
from dist_core.dist import new_dist, parse_number
from fluct_lab.chains import MarkovChainSpec
from fluct_lab.energies import EnergyFamily, check_energy_family


class NumberField(serializers.Field):
    """Float, integer or exact "a/b" string"""
    default_error_messages = {
        "invalid": "{value!r} is not a number or an 'a/b' rational",
    }

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (int, float, str)):
            self.fail("invalid", value=data)
        try:
            return parse_number(data)
        except (ValueError, ZeroDivisionError):
            self.fail("invalid", value=data)

    def to_representation(self, value):
        return value


def number_list(**kwargs) -> serializers.ListField:
    return serializers.ListField(child=NumberField(), **kwargs)


class DistSerializer(serializers.Serializer):
    """A distribution file holds a bare array of entries"""
    probs = number_list(allow_empty=False)


class ScoreSerializer(serializers.Serializer):
    values = serializers.ListField(
        child=serializers.FloatField(), allow_empty=False
    )


class PosetSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    pairs = serializers.ListField(
        child=serializers.ListField(
            child=serializers.IntegerField(min_value=0),
            min_length=2, max_length=2
        ),
        default=list
    )
    labels = serializers.ListField(
        child=serializers.CharField(), required=False
    )

    def validate(self, attrs):
        """Check the pairs and labels fit the element count"""
        n = attrs["n"]
        for index, (i, j) in enumerate(attrs["pairs"]):
            if i >= n or j >= n:
                raise serializers.ValidationError(
                    {"pairs": {index: [f"element outside 0..{n - 1}"]}}
                )
        labels = attrs.get("labels")
        if labels is not None and len(labels) != n:
            raise serializers.ValidationError(
                {"labels": [f"{len(labels)} labels for {n} elements"]}
            )
        return attrs


class FamilySerializer(serializers.Serializer):
    funcs = serializers.ListField(
        child=serializers.ListField(child=NumberField(), allow_empty=False),
        allow_empty=False
    )


class RelationsSerializer(serializers.Serializer):
    """Sequence of relations, each a square matrix of booleans or 0/1"""
    relations = serializers.ListField(
        child=serializers.ListField(
            child=serializers.ListField(child=serializers.BooleanField())
        ),
        allow_empty=False
    )

    def validate_relations(self, relations):
        for index, matrix in enumerate(relations):
            if any(len(row) != len(matrix) for row in matrix):
                raise serializers.ValidationError(
                    {index: ["relation matrix is not square"]}
                )
        return relations


class ChainSerializer(serializers.Serializer):
    """Initial distribution, transition matrices and optional energies

    Matrices are column stochastic: mats[k][y][x] is the probability of
    moving from x to y at step k + 1.
    """
    p0 = number_list(allow_empty=False)
    mats = serializers.ListField(
        child=serializers.ListField(child=number_list(allow_empty=False))
    )
    energies = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField()),
        required=False
    )
    beta = serializers.FloatField(default=1.0)

    def validate(self, attrs):
        """Build the chain, pinning library errors to the field at fault"""
        try:
            p0 = new_dist(attrs["p0"])
        except OrdlabError as error:
            raise serializers.ValidationError({"p0": [str(error)]})
        try:
            attrs["spec"] = MarkovChainSpec.build(p0, attrs["mats"])
        except OrdlabError as error:
            raise serializers.ValidationError({"mats": [str(error)]})
        if "energies" in attrs:
            try:
                E = EnergyFamily.from_energies(attrs["beta"],
                                               attrs["energies"])
                check_energy_family(attrs["spec"], E)
            except ValueError as error:
                raise serializers.ValidationError({"energies": [str(error)]})
            attrs["E"] = E
        return attrs


def _flatten(detail: Any, path: str = "") -> Iterator[Tuple[str, str]]:
    """(field path, message) pairs of a nested DRF error detail"""
    if isinstance(detail, dict):
        for key, value in detail.items():
            if key == api_settings.NON_FIELD_ERRORS_KEY:
                step = path
            elif isinstance(key, int):
                step = f"{path}[{key}]"
            else:
                step = f"{path}.{key}" if path else str(key)
            yield from _flatten(value, step)
    elif isinstance(detail, list):
        for value in detail:
            yield from _flatten(value, path)
    else:
        yield path, str(detail)


def validated(serializer_class, data, source: str = "") -> dict:
    """validated_data of the serializer, or ParseError at the first fault"""
    serializer = serializer_class(data=data)
    if not serializer.is_valid():
        path, message = next(_flatten(serializer.errors))
        location = f"{source}:{path}" if source and path else source or path
        raise ParseError(message, location)
    return serializer.validated_data
