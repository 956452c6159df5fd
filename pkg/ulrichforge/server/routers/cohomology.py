"""
UlrichForge - Surface Router
Line-bundle cohomology, configuration checks, presentations and line searches on F_e.
"""
from fastapi import APIRouter

from schemas.requests import CohomologyRequest, ConfigRequest, LineSearchRequest, PresentationRequest
from services import commands
from utils.canonical import to_plain

router = APIRouter(prefix="/api", tags=["Surface"])


@router.post("/cohomology")
async def cohomology(data: CohomologyRequest):
    """h^0, h^1, h^2 and chi of O(aC + bf)."""
    return commands.cohomology(data.e, data.a, data.b)


@router.post("/config/validate")
async def validate_config(data: ConfigRequest):
    return to_plain(commands.validate(data.e, data.b, data.k, data.r))


@router.post("/presentation")
async def presentation(data: PresentationRequest):
    return to_plain(commands.presentation(data.e, data.b, data.k, data.r, data.seed, data.field))


@router.post("/search-lines")
async def search_lines(data: LineSearchRequest):
    return to_plain(commands.search_lines(data.e, data.b, data.box))
