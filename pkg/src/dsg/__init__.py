"""Locally self-adjusting skip graphs: topology, routing, approximate median
finding, the transformation engine, a working-set oracle and a round-based
simulator."""

from .topology import (NodeRecord, Topology, Violation, build_initial,
                       export_topology, highest_common_level, import_topology,
                       validate)

__all__ = ["NodeRecord", "Topology", "Violation", "build_initial",
           "export_topology", "highest_common_level", "import_topology",
           "validate"]
