from misere.services.cache import QuotientCache, make_cache_key

__all__ = ["QuotientCache", "make_cache_key"]
