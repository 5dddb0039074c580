import type { Stage } from "../src/types.js";

export const STAGES: Stage[] = [
  {
    name: "Data Collection",
    description:
      "Code related to gathering datasets, extracting data from APIs, web scraping, or loading data from files or databases.",
  },
  {
    name: "Data Processing",
    description:
      "Code that preprocesses data, including cleaning, normalization, encoding, arrays manipulations, and splitting datasets.",
  },
  {
    name: "Model Training",
    description:
      "Code that defines, configures, or fits machine learning models, including training loops, epochs, optimizers, loss functions, and hyperparameter settings.",
  },
  {
    name: "Model Evaluation",
    description:
      "Code that measures model quality, including computing accuracy, precision, recall, F1 scores, confusion matrices, validation metrics, and cross-validation.",
  },
  {
    name: "Model Deployment",
    description:
      "Code that packages, saves, serves, or exposes trained models for inference, including model export, loading for prediction, and serving endpoints.",
  },
];

export const TRAINING_LOOP_FIXTURE = `
import torch

def train(model, loader, epochs):
    optimizer = torch.optim.Adam(model.parameters(), lr=1e-3)
    criterion = torch.nn.CrossEntropyLoss()
    for epoch in range(epochs):
        for batch, labels in loader:
            optimizer.zero_grad()
            loss = criterion(model(batch), labels)
            loss.backward()
            optimizer.step()
    return model
`;

export const FIXTURE_FILES: Record<string, string> = {
  "train_loop.py": TRAINING_LOOP_FIXTURE,
  "download.py": "import requests\nresp = requests.get(url)\nopen('data.csv', 'wb').write(resp.content)\n",
  "scale.py": "from sklearn.preprocessing import StandardScaler\nX = StandardScaler().fit_transform(X)\n",
  "metrics.py": "from sklearn.metrics import accuracy_score, confusion_matrix\nprint(accuracy_score(y, y_hat))\n",
  "serve.py": "from fastapi import FastAPI\napp = FastAPI()\nmodel = load_model('m.onnx')\n",
  "utils.py": "def add(a, b):\n    return a + b\n",
  "empty.py": "",
  "readme.py": "# This project explores gradient boosting on tabular data.\n",
  "split.py": "from sklearn.model_selection import train_test_split\nXtr, Xte = train_test_split(X)\n",
  "plot.py": "import matplotlib.pyplot as plt\nplt.plot(xs, ys)\nplt.savefig('out.png')\n",
};
