import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import yaml

if TYPE_CHECKING:
    from pathlib import Path

log = logging.getLogger("hyperwiener.settings")


@dataclass
class Settings:
    """
    Global toolkit settings

    Attributes
    ----------
    jobs: int
        Default number of worker processes used by ``verify``
    sweep_low_bits: int
        Number of low edge bits covered by the per-worker lookup table of a full sweep.
        Chunks of a full sweep are ranges of the remaining high bits.
    max_candidates: int
        Largest number of candidate edge sets a sweep may scan
    max_ranked_edges: int
        Largest C(n, k) a bitmask sweep accepts
    shadow_cache_size: int
        Size of the per-process LRU cache mapping a 2-section to its Wiener index
    canonical_max_order: int
        Largest order accepted by ``canonical_form``
    oracle_max_order: int
        Largest order accepted by ``berge_path_oracle``
    oracle_max_edges: int
        Largest edge count accepted by ``berge_path_oracle``
    identities_s_max: int
        Default upper bound of s for the identity sweep
    identities_k_max: int
        Default upper bound of k for the identity sweep
    log_file: str | None
        Path of a rotating log file, disabled when None
    """

    jobs: int = 1

    # sweeps
    sweep_low_bits: int = 12
    max_candidates: int = 2**22
    max_ranked_edges: int = 64
    shadow_cache_size: int = 2**16

    # guards
    canonical_max_order: int = 10
    oracle_max_order: int = 13
    oracle_max_edges: int = 8

    # identities
    identities_s_max: int = 10
    identities_k_max: int = 8

    log_file: str | None = None


settings = Settings()


def read_settings(path: "Path"):
    content = yaml.load(path.read_text(), yaml.SafeLoader) or {}

    settings.jobs = content.get("jobs", 1)

    sweep = content.get("sweep") or {}
    settings.sweep_low_bits = sweep.get("low-bits", 12)
    settings.max_candidates = sweep.get("max-candidates", 2**22)
    settings.max_ranked_edges = sweep.get("max-ranked-edges", 64)
    settings.shadow_cache_size = sweep.get("shadow-cache-size", 2**16)

    settings.canonical_max_order = (content.get("canonical") or {}).get("max-order", 10)

    oracle = content.get("oracle") or {}
    settings.oracle_max_order = oracle.get("max-order", 13)
    settings.oracle_max_edges = oracle.get("max-edges", 8)

    identities = content.get("identities") or {}
    settings.identities_s_max = identities.get("s-max", 10)
    settings.identities_k_max = identities.get("k-max", 8)

    settings.log_file = content.get("log-file", None)
    log.info("Settings loaded.")


def write_default_settings(path: "Path"):
    path.write_text(
        """# yaml-language-server: $schema=json-config-ref.json

# number of worker processes used by "verify" when --jobs is not given
jobs: 1

# exhaustive sweeps over edge subsets
sweep:
  # low edge bits handled through a lookup table by each worker
  low-bits: 12

  # refuse sweeps scanning more edge sets than this
  max-candidates: 4194304

  # refuse sweeps with more ranked k-subsets than this (bitmask width)
  max-ranked-edges: 64

  # per-process cache of 2-section evaluations
  shadow-cache-size: 65536

# canonical forms try every relabeling, keep this small
canonical:
  max-order: 10

# the brute-force Berge path search is exponential, keep this small
oracle:
  max-order: 13
  max-edges: 8

# default grid of the "identities" command
identities:
  s-max: 10
  k-max: 8

# write logs to this rotating file, leave empty to disable
log-file:
"""
    )


def update_settings(path: "Path"):
    content = path.read_text()

    add_config_ref = "# yaml-language-server: $schema=json-config-ref.json" not in content
    add_oracle = "oracle:" not in content
    add_identities = "identities:" not in content

    if add_config_ref:
        content = "# yaml-language-server: $schema=json-config-ref.json\n" + content

    if add_oracle:
        content += """
# the brute-force Berge path search is exponential, keep this small
oracle:
  max-order: 13
  max-edges: 8
"""

    if add_identities:
        content += """
# default grid of the "identities" command
identities:
  s-max: 10
  k-max: 8
"""

    if any((add_config_ref, add_oracle, add_identities)):
        path.write_text(content)
        log.info(f"Settings file {path} updated with new sections.")
