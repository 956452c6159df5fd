"""
UlrichForge - Scroll Router
Chow-ring products, slope and specialness of U_r, and the line-bundle candidates on X_e.
"""
from fastapi import APIRouter

from schemas.requests import CheckARequest, ChowRequest, ConfigRequest
from services import commands
from utils.canonical import to_plain

router = APIRouter(prefix="/api/scroll", tags=["Scroll"])


@router.post("/slope")
async def slope(data: ConfigRequest):
    return to_plain(commands.scroll_slope(data.e, data.b, data.k, data.r))


@router.post("/check-a")
async def check_a(data: CheckARequest):
    return to_plain(commands.scroll_check_a(data.e, data.t_max, data.b_values))


@router.post("/chow")
async def chow(data: ChowRequest):
    triples = [(c.m, c.a, c.b) for c in (data.x, data.y, data.z)]
    return commands.scroll_chow(data.e, data.b, data.k, *triples)
