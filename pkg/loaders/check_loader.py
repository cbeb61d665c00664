"""Check loader entry points."""

from typing import Dict, Iterable, Mapping, Optional

from loaders._entity_loader import ConfigAdapter, load_entities


def _with_defaults(defaults: Mapping) -> ConfigAdapter:
    def adapter(config: Dict) -> Dict:
        merged = dict(defaults)
        merged.update(config)
        return merged

    return adapter


def load_checks(check_definitions: Iterable[Dict], defaults: Optional[Mapping] = None):
    """Load property checks; ``defaults`` fill keys a definition leaves out."""

    return load_entities(
        check_definitions,
        package="checks",
        kind="check",
        config_adapter=_with_defaults(defaults or {}),
    )
