import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
root_dir_content = os.listdir(BASE_DIR)
PROJECT_DIR_NAME = 'lloyd'
MANAGE_PATH = os.path.join(BASE_DIR, PROJECT_DIR_NAME)
# the project package sits at the repository root
if (
        PROJECT_DIR_NAME not in root_dir_content
        or not os.path.isdir(MANAGE_PATH)
):
    assert False, (
        f'Project directory `{PROJECT_DIR_NAME}` not found in `{BASE_DIR}`.'
    )

project_dir_content = os.listdir(MANAGE_PATH)
FILENAME = 'manage.py'
if FILENAME not in project_dir_content:
    assert False, (
        f'`{FILENAME}` not found in `{MANAGE_PATH}`; check the project layout.'
    )

from django.utils.version import get_version

assert get_version() >= '4.2', 'Django 4.2 or newer is required'

from lloyd.settings import INSTALLED_APPS

for app in ('core', 'measures', 'free_models', 'ensemble', 'spectra',
            'verify'):
    assert any(entry.split('.')[0] == app for entry in INSTALLED_APPS), (
        f'Register the `{app}` app in `settings.INSTALLED_APPS`'
    )

pytest_plugins = [
    'tests.fixtures.fixture_data',
    'tests.fixtures.fixture_runs',
]
