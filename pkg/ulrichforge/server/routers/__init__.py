from routers.cohomology import router as cohomology_router  # noqa
from routers.verify import router as verify_router  # noqa
from routers.moduli import router as moduli_router  # noqa
from routers.scroll import router as scroll_router  # noqa
