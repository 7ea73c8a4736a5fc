"""
JSON input and output forms of the domain values.

``serializer.is_valid(raise_exception=True)`` checks the structure,
``serializer.save()`` builds the domain value and raises the domain
exceptions for semantic errors.
"""
from typing import Any, Dict, List, Text, Tuple

from django.conf import settings
from rest_framework import fields, serializers
from vstutils.api.serializers import BaseSerializer

from .alexandroff import AlexTopology
from .constants import Bound
from .exceptions import SizeMismatch
from .order import FinitePoset, NiceFamily, elem_set, elements
from .patterns import PatternRing
from .spectra import SpectralModel
from .utils import load_yaml
from .valuation import CutIdeal


class DomainSerializer(BaseSerializer):
    def to_representation(self, instance):
        if hasattr(instance, 'to_dict'):
            return instance.to_dict()
        return super().to_representation(instance)


class PosetSerializer(DomainSerializer):
    n = fields.IntegerField(min_value=1)
    leq = fields.ListField(child=fields.ListField(child=fields.BooleanField()))

    def create(self, validated_data: Dict) -> FinitePoset:
        poset = FinitePoset.from_relation(validated_data['leq'])
        if poset.n != validated_data['n']:
            raise SizeMismatch(validated_data['n'], poset.n)
        return poset


class FamilySerializer(DomainSerializer):
    ground = fields.IntegerField(min_value=0)
    members = fields.ListField(child=fields.ListField(child=fields.IntegerField(min_value=0)))

    def create(self, validated_data: Dict) -> NiceFamily:
        return NiceFamily.from_sets(validated_data['ground'], validated_data['members'])


class TopologySerializer(DomainSerializer):
    n = fields.IntegerField(min_value=1)
    opens = fields.ListField(child=fields.ListField(child=fields.IntegerField(min_value=0)))

    def to_representation(self, instance: AlexTopology):
        return {'n': instance.n, 'opens': [elements(u) for u in instance.opens()]}

    def create(self, validated_data: Dict) -> AlexTopology:
        return AlexTopology.from_opens(validated_data['n'], map(elem_set, validated_data['opens']))


class CutSerializer(DomainSerializer):
    zero = fields.BooleanField(default=False)
    gamma = fields.CharField(required=False)
    bound = fields.ChoiceField(choices=Bound.get_values_list(), default=Bound.CLOSED.value)

    def validate(self, attrs: Dict) -> Dict:
        if not attrs.get('zero') and 'gamma' not in attrs:
            raise serializers.ValidationError({'gamma': 'Nonzero cuts need a cut point.'})
        return attrs

    def create(self, validated_data: Dict) -> CutIdeal:
        return CutIdeal.from_dict(validated_data)


class PatternRingSerializer(DomainSerializer):
    n = fields.IntegerField(min_value=1)
    entries = fields.ListField(child=fields.ListField(child=CutSerializer()))

    def create(self, validated_data: Dict) -> PatternRing:
        return PatternRing.from_dict(validated_data)


class SpectralModelSerializer(DomainSerializer):
    ground = fields.IntegerField(min_value=0)
    members = fields.ListField(child=fields.ListField(child=fields.IntegerField(min_value=0)))
    primes = fields.IntegerField(min_value=1)
    cover = fields.DictField(child=fields.ListField(child=fields.IntegerField(min_value=0)))
    oracle = fields.CharField(required=False)

    def create(self, validated_data: Dict) -> SpectralModel:
        family = NiceFamily.from_sets(validated_data['ground'], validated_data['members'])
        cover = validated_data['cover']
        return SpectralModel(
            family,
            validated_data['primes'],
            [elem_set(cover.get(str(i), ())) for i in range(len(family))],
            validated_data.get('oracle', settings.SPECTRA['oracle']),
        )


def build(serializer_class, data: Any):
    serializer = serializer_class(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def load_spectral_fixtures(path: Text) -> List[Tuple[Text, SpectralModel, Dict]]:
    '''
    Read named spectral models with their expected outcomes.

    :param path: YAML file with a ``models`` list
    :return: ``(name, model, expected)`` triples in file order
    '''
    return [
        (entry['name'], build(SpectralModelSerializer, entry['model']), entry.get('expected', {}))
        for entry in load_yaml(path)['models']
    ]
