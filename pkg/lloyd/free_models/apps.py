from django.apps import AppConfig


class FreeModelsConfig(AppConfig):
    name = 'free_models'
    verbose_name = 'Free operators'
