import os
import tempfile

from django.test import SimpleTestCase

from src.config.settings.base import BASE_DIR
from src.core.utils.base.base_commands import load_config_file
from src.core.utils.discovery import discover_installed_apps, get_env_deploy_type
from src.core.utils.methods import format_errors

class LoadConfigFileTests(SimpleTestCase):
    def write(self, directory: str, content: str) -> str:
        path = os.path.join(directory, 'run.yaml')
        with open(path, 'w', encoding='utf-8') as config_file:
            config_file.write(content)
        return path

    def test_keys_normalized(self):
        with tempfile.TemporaryDirectory() as directory:
            path = self.write(directory, "fit-window: [10, 20]\n--output-dir: out\nalpha: pi/4\n")
            self.assertEqual(
                load_config_file(path),
                {'fit_window': [10, 20], 'output_dir': 'out', 'alpha': 'pi/4'},
            )

    def test_empty_file(self):
        with tempfile.TemporaryDirectory() as directory:
            self.assertEqual(load_config_file(self.write(directory, "")), {})

    def test_invalid_content(self):
        with tempfile.TemporaryDirectory() as directory:
            for content in ("- a\n- b\n", "model: [unclosed\n"):
                with self.subTest(content=content):
                    with self.assertRaises(ValueError):
                        load_config_file(self.write(directory, content))

    def test_missing_file(self):
        with self.assertRaises(ValueError):
            load_config_file('/nonexistent/run.yaml')

class FormatErrorsTests(SimpleTestCase):
    def test_nested_errors(self):
        errors = {'alpha': ['Не удалось разобрать угол.'], 'fit_window': {'0': ['Обязательное поле.']}}
        self.assertEqual(
            format_errors(errors),
            'alpha: Не удалось разобрать угол.; fit_window: 0: Обязательное поле.',
        )

class DiscoveryTests(SimpleTestCase):
    def test_walks_app_found(self):
        apps = discover_installed_apps(os.path.join(BASE_DIR, 'external'))
        self.assertEqual(apps, ['src.external.fibonacci_walks'])

    def test_deploy_type(self):
        self.assertIn(get_env_deploy_type(), ('src.config.patterns.development', 'src.config.patterns.production'))
