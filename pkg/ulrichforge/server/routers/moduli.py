"""
UlrichForge - Moduli Router
"""
from fastapi import APIRouter

from schemas.requests import ModuliRequest
from services import commands
from utils.canonical import to_plain

router = APIRouter(prefix="/api", tags=["Moduli"])


@router.post("/moduli-dim")
def moduli_dim(data: ModuliRequest):
    return to_plain(commands.moduli_dim(data.r, data.e, data.b, data.k, data.with_ext, data.seed, data.field))
