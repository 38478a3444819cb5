"""
Presentations of the free symmetric monoidal category on one object and of
its iterates, together with the components at 1 of the monad structure.

* ``S1``: finite cardinals and bijections (:class:`S1Mor`).
* ``S^2 1``: monotone maps ``n -> m`` (:class:`S2Obj`) and commuting pairs of
  bijections (:class:`S2Mor`).
* ``S^3 1``: chains ``n -> m -> r`` of monotone maps (:class:`S3Obj`) and
  ladders of three bijections (:class:`S3Mor`).
"""
from ._symcat import (
    S1Mor,
    S2Obj,
    S2Mor,
    S3Obj,
    S3Mor,
    s1_hom,
    s2_hom,
    s2_compose,
    s3_hom,
    s3_compose,
    enumerate_s2,
    enumerate_s3,
    enumerate_chains,
    collapse,
)

from ._monad import Component, monad_component
